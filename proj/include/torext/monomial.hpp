#ifndef TOREXT_MONOMIAL_HPP
#define TOREXT_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "torext/errors.hpp"

namespace torext {

// Exponent vector over a registry. Exponents are bounded by 2^16 - 1;
// arithmetic that would exceed the bound throws ExponentOverflow.
class Monomial {
  public:
    static constexpr std::uint32_t kMaxExponent = 65535;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

    std::size_t size() const { return exps_.size(); }
    std::uint32_t exp(std::size_t v) const { return exps_[v]; }
    void set_exp(std::size_t v, std::uint32_t e) {
        if (e > kMaxExponent) throw ExponentOverflow();
        exps_[v] = e;
    }

    bool is_unit() const {
        for (auto e : exps_)
            if (e) return false;
        return true;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            std::uint32_t s = exps_[i] + o.exps_[i];
            if (s > kMaxExponent) throw ExponentOverflow();
            r.exps_[i] = s;
        }
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > o.exps_[i]) return false;
        return true;
    }

    // this / o, assuming o divides this
    Monomial divide(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (b.exps_[i] > r.exps_[i]) r.exps_[i] = b.exps_[i];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.exps_.size(); ++i)
            if (a.exps_[i] && b.exps_[i]) return false;
        return true;
    }

    bool operator==(const Monomial& o) const = default;

  private:
    std::vector<std::uint32_t> exps_;
};

}  // namespace torext

#endif
