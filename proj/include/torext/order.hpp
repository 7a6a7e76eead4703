#ifndef TOREXT_ORDER_HPP
#define TOREXT_ORDER_HPP

#include <vector>

#include "torext/monomial.hpp"
#include "torext/registry.hpp"

namespace torext {

enum class OrderKind { Grevlex, Lex, Block };

// Total monomial order compatible with multiplication. Block orders compare
// the eliminated block first (grevlex within the block), so any monomial
// touching an eliminated variable dominates every monomial that does not.
class MonomialOrder {
  public:
    static MonomialOrder grevlex(RegistryPtr reg);
    static MonomialOrder lex(RegistryPtr reg);
    static MonomialOrder block(RegistryPtr reg, const std::vector<std::size_t>& eliminated);

    OrderKind kind() const { return kind_; }
    const RegistryPtr& registry() const { return reg_; }
    const std::vector<std::size_t>& eliminated() const { return elim_; }

    // negative if a < b, zero if equal, positive if a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && same_registry(reg_, o.reg_) && elim_ == o.elim_;
    }

  private:
    MonomialOrder(OrderKind k, RegistryPtr reg) : kind_(k), reg_(std::move(reg)) {}

    int grevlex_on(const std::vector<std::size_t>& prec, const Monomial& a, const Monomial& b) const;

    OrderKind kind_;
    RegistryPtr reg_;
    std::vector<std::size_t> elim_;        // eliminated variables (block only)
    std::vector<std::size_t> elim_prec_;   // precedence restricted to the block
    std::vector<std::size_t> rest_prec_;   // precedence on the complement
};

}  // namespace torext

#endif
