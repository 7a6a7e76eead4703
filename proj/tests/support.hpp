#ifndef TOREXT_TESTS_SUPPORT_HPP
#define TOREXT_TESTS_SUPPORT_HPP

#include <random>

#include "torext/parser.hpp"
#include "torext/poly.hpp"

namespace torext::testsupport {

inline Scalar random_scalar(std::mt19937& rng, const Field& field, int span = 20) {
    std::uniform_int_distribution<std::int64_t> dist(-span, span);
    if (field.kind() == FieldKind::Rationals) {
        std::int64_t den = 0;
        while (den == 0) den = dist(rng);
        return Scalar::fraction(dist(rng), den);
    }
    return Scalar(field, dist(rng));
}

inline MultiPoly random_poly(std::mt19937& rng, const RegistryPtr& reg, const Field& field,
                             int max_terms = 6, std::uint32_t max_exp = 4) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    int n = nterms(rng);
    std::vector<Term> terms;
    for (int i = 0; i < n; ++i) {
        Monomial m(reg->size());
        for (std::size_t v = 0; v < reg->size(); ++v) m.set_exp(v, exp(rng));
        terms.push_back({m, random_scalar(rng, field)});
    }
    return MultiPoly(reg, field, std::move(terms));
}

inline MultiPoly nonzero_random_poly(std::mt19937& rng, const RegistryPtr& reg, const Field& field,
                                     int max_terms = 6, std::uint32_t max_exp = 4) {
    while (true) {
        MultiPoly f = random_poly(rng, reg, field, max_terms, max_exp);
        if (!f.is_zero()) return f;
    }
}

// small test ring k[pi, x, y] with x a base coordinate and y auxiliary
inline RegistryPtr xy_registry() {
    return std::make_shared<VariableRegistry>(std::vector<VarInfo>{
        {"pi", VarRole::Uniformizer, 0, 0, 0},
        {"x", VarRole::BaseCoord, 0, 0, 0},
        {"y", VarRole::Auxiliary, 0, 0, 0},
    });
}

inline MultiPoly parse_in(const std::string& text, const RegistryPtr& reg, const Field& field) {
    return poly_parse(text, reg, field);
}

}  // namespace torext::testsupport

#endif
