#ifndef TOREXT_POLY_HPP
#define TOREXT_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "torext/monomial.hpp"
#include "torext/order.hpp"
#include "torext/registry.hpp"
#include "torext/scalar.hpp"

namespace torext {

struct Term {
    Monomial mon;
    Scalar coeff;

    bool operator==(const Term&) const = default;
};

// Sparse multivariate polynomial over a Scalar field. Terms are kept in
// canonical form: nonzero coefficients, strictly descending monomials under
// the registry's default grevlex order. Values are immutable in spirit; all
// operations return fresh polynomials.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(RegistryPtr reg, Field field) : reg_(std::move(reg)), field_(field) {}
    // canonicalizes: sorts, merges duplicates, drops zeros
    MultiPoly(RegistryPtr reg, Field field, std::vector<Term> terms);

    static MultiPoly zero(RegistryPtr reg, Field field) { return MultiPoly(std::move(reg), field); }
    static MultiPoly constant(RegistryPtr reg, const Scalar& c);
    static MultiPoly variable(RegistryPtr reg, Field field, std::size_t var, std::uint32_t e = 1);

    const RegistryPtr& registry() const { return reg_; }
    const Field& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t n_terms() const { return terms_.size(); }
    std::uint64_t total_degree() const;  // 0 for the zero polynomial

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const Scalar& c) const;
    MultiPoly pow(std::uint64_t e) const;

    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Leading data under an arbitrary order (linear scan; terms stay in the
    // canonical default order).
    const Term& leading_term(const MonomialOrder& ord) const;

    // Coefficient of a monomial (zero scalar if absent).
    Scalar coeff_of(const Monomial& m) const;

    // Largest m such that pi^m divides the polynomial; throws on zero input.
    std::uint32_t t_content() const;
    // (g, m) with *this = pi^m * g and t_content(g) = 0.
    std::pair<MultiPoly, std::uint32_t> primitivize() const;
    // substitute pi = 0
    MultiPoly reduce_mod_t() const;
    // delete every monomial involving a base coordinate (substitute t = 0)
    MultiPoly specialize_origin() const;
    // multiply by pi^k
    MultiPoly times_t_power(std::uint32_t k) const;

    // Substitute scalar values for a subset of variables (others untouched).
    MultiPoly substitute_scalars(const std::vector<std::pair<std::size_t, Scalar>>& values) const;

    // Canonical text form; parse(print(f)) == f.
    std::string to_string() const;

  private:
    void canonicalize();
    RegistryPtr reg_;
    Field field_ = Field::rationals();
    std::vector<Term> terms_;
};

inline MultiPoly operator*(const Scalar& c, const MultiPoly& f) { return f * c; }

}  // namespace torext

#endif
