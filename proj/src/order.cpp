#include "torext/order.hpp"

#include <algorithm>

namespace torext {

MonomialOrder MonomialOrder::grevlex(RegistryPtr reg) {
    return MonomialOrder(OrderKind::Grevlex, std::move(reg));
}

MonomialOrder MonomialOrder::lex(RegistryPtr reg) {
    return MonomialOrder(OrderKind::Lex, std::move(reg));
}

MonomialOrder MonomialOrder::block(RegistryPtr reg, const std::vector<std::size_t>& eliminated) {
    MonomialOrder ord(OrderKind::Block, reg);
    ord.elim_ = eliminated;
    std::sort(ord.elim_.begin(), ord.elim_.end());
    std::vector<bool> in_block(reg->size(), false);
    for (std::size_t v : ord.elim_) in_block[v] = true;
    for (std::size_t v : reg->precedence())
        (in_block[v] ? ord.elim_prec_ : ord.rest_prec_).push_back(v);
    return ord;
}

int MonomialOrder::grevlex_on(const std::vector<std::size_t>& prec, const Monomial& a,
                              const Monomial& b) const {
    std::uint64_t da = 0, db = 0;
    for (std::size_t v : prec) {
        da += a.exp(v);
        db += b.exp(v);
    }
    if (da != db) return da < db ? -1 : 1;
    // reverse-lex tie break: scan least significant variable first; the
    // monomial with the smaller exponent at the first difference is larger
    for (auto it = prec.rbegin(); it != prec.rend(); ++it) {
        std::uint32_t ea = a.exp(*it), eb = b.exp(*it);
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case OrderKind::Grevlex:
            return grevlex_on(reg_->precedence(), a, b);
        case OrderKind::Lex:
            for (std::size_t v : reg_->precedence()) {
                std::uint32_t ea = a.exp(v), eb = b.exp(v);
                if (ea != eb) return ea < eb ? -1 : 1;
            }
            return 0;
        case OrderKind::Block: {
            int c = grevlex_on(elim_prec_, a, b);
            if (c != 0) return c;
            return grevlex_on(rest_prec_, a, b);
        }
    }
    return 0;
}

}  // namespace torext
