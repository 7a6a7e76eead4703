#include "torext/poly.hpp"

#include <algorithm>

namespace torext {

MultiPoly::MultiPoly(RegistryPtr reg, Field field, std::vector<Term> terms)
    : reg_(std::move(reg)), field_(field), terms_(std::move(terms)) {
    canonicalize();
}

void MultiPoly::canonicalize() {
    for (const Term& t : terms_) {
        if (t.mon.size() != reg_->size()) throw RegistryMismatch("term monomial has wrong arity");
        if (t.coeff.field() != field_) throw FieldMismatch();
    }
    MonomialOrder ord = MonomialOrder::grevlex(reg_);
    std::sort(terms_.begin(), terms_.end(),
              [&ord](const Term& a, const Term& b) { return ord.compare(a.mon, b.mon) > 0; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().mon == t.mon)
            merged.back().coeff = merged.back().coeff + t.coeff;
        else
            merged.push_back(std::move(t));
    }
    terms_.clear();
    for (Term& t : merged)
        if (!t.coeff.is_zero()) terms_.push_back(std::move(t));
}

MultiPoly MultiPoly::constant(RegistryPtr reg, const Scalar& c) {
    MultiPoly f(reg, c.field());
    if (!c.is_zero()) f.terms_.push_back({Monomial(reg->size()), c});
    return f;
}

MultiPoly MultiPoly::variable(RegistryPtr reg, Field field, std::size_t var, std::uint32_t e) {
    MultiPoly f(reg, field);
    if (e == 0) return constant(reg, Scalar::one(field));
    Monomial m(reg->size());
    m.set_exp(var, e);
    f.terms_.push_back({m, Scalar::one(field)});
    return f;
}

std::uint64_t MultiPoly::total_degree() const {
    std::uint64_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mon.total_degree());
    return d;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_registry(reg_, o.reg_);
    if (field_ != o.field_) throw FieldMismatch();
    std::vector<Term> terms = terms_;
    terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
    return MultiPoly(reg_, field_, std::move(terms));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(reg_, field_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mon, -t.coeff});
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_registry(reg_, o.reg_);
    if (field_ != o.field_) throw FieldMismatch();
    std::vector<Term> terms;
    terms.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) terms.push_back({a.mon * b.mon, a.coeff * b.coeff});
    return MultiPoly(reg_, field_, std::move(terms));
}

MultiPoly MultiPoly::operator*(const Scalar& c) const {
    if (c.is_zero()) return zero(reg_, field_);
    MultiPoly r(reg_, field_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.mon, t.coeff * c});
    return r;
}

MultiPoly MultiPoly::pow(std::uint64_t e) const {
    MultiPoly acc = constant(reg_, Scalar::one(field_));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        if (e >>= 1) base = base * base;
    }
    return acc;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (!same_registry(reg_, o.reg_) || field_ != o.field_ || terms_.size() != o.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mon == o.terms_[i].mon) || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
}

const Term& MultiPoly::leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no leading term");
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
        if (ord.compare(t.mon, best->mon) > 0) best = &t;
    return *best;
}

Scalar MultiPoly::coeff_of(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.mon == m) return t.coeff;
    return Scalar::zero(field_);
}

std::uint32_t MultiPoly::t_content() const {
    if (terms_.empty()) throw ZeroPolynomial("t-content of the zero polynomial is undefined");
    std::size_t u = reg_->uniformizer();
    std::uint32_t c = Monomial::kMaxExponent;
    for (const Term& t : terms_) c = std::min(c, t.mon.exp(u));
    return c;
}

std::pair<MultiPoly, std::uint32_t> MultiPoly::primitivize() const {
    std::uint32_t c = t_content();
    if (c == 0) return {*this, 0};
    std::size_t u = reg_->uniformizer();
    MultiPoly g(reg_, field_);
    g.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m = t.mon;
        m.set_exp(u, m.exp(u) - c);
        g.terms_.push_back({m, t.coeff});
    }
    return {g, c};
}

MultiPoly MultiPoly::reduce_mod_t() const {
    std::size_t u = reg_->uniformizer();
    MultiPoly r(reg_, field_);
    for (const Term& t : terms_)
        if (t.mon.exp(u) == 0) r.terms_.push_back(t);
    return r;
}

MultiPoly MultiPoly::specialize_origin() const {
    MultiPoly r(reg_, field_);
    for (const Term& t : terms_) {
        bool base_free = true;
        for (std::size_t v = 0; v < reg_->size() && base_free; ++v)
            if (t.mon.exp(v) > 0 && reg_->var(v).role == VarRole::BaseCoord) base_free = false;
        if (base_free) r.terms_.push_back(t);
    }
    return r;
}

MultiPoly MultiPoly::times_t_power(std::uint32_t k) const {
    if (k == 0) return *this;
    std::size_t u = reg_->uniformizer();
    MultiPoly r(reg_, field_);
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m = t.mon;
        std::uint32_t e = m.exp(u) + k;
        if (e > Monomial::kMaxExponent) throw ExponentOverflow();
        m.set_exp(u, e);
        r.terms_.push_back({m, t.coeff});
    }
    return r;
}

MultiPoly MultiPoly::substitute_scalars(
    const std::vector<std::pair<std::size_t, Scalar>>& values) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const Term& t : terms_) {
        Scalar c = t.coeff;
        Monomial m = t.mon;
        for (const auto& [v, val] : values) {
            std::uint32_t e = m.exp(v);
            if (e == 0) continue;
            c = c * val.pow(e);
            m.set_exp(v, 0);
        }
        if (!c.is_zero()) terms.push_back({m, c});
    }
    return MultiPoly(reg_, field_, std::move(terms));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        std::string cs = t.coeff.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mon;
        for (std::size_t v = 0; v < reg_->size(); ++v) {
            std::uint32_t e = t.mon.exp(v);
            if (e == 0) continue;
            if (!mon.empty()) mon += "*";
            mon += reg_->name(v);
            if (e > 1) mon += "^" + std::to_string(e);
        }
        if (mon.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mon;
        } else {
            out += cs + "*" + mon;
        }
    }
    return out;
}

}  // namespace torext
