#ifndef TOREXT_IDEAL_HPP
#define TOREXT_IDEAL_HPP

#include <optional>
#include <vector>

#include "torext/order.hpp"
#include "torext/poly.hpp"

namespace torext {

// Generator presentation of an ideal in k[pi, vars]. Zero generators are
// dropped on construction. A reduced Groebner basis is cached per order
// (single-writer discipline; concurrent use of distinct presentations is
// safe).
class IdealPresentation {
  public:
    IdealPresentation(RegistryPtr reg, Field field, std::vector<MultiPoly> gens);

    static IdealPresentation zero(RegistryPtr reg, Field field) {
        return IdealPresentation(std::move(reg), field, {});
    }

    const RegistryPtr& registry() const { return reg_; }
    const Field& field() const { return field_; }
    const std::vector<MultiPoly>& generators() const { return gens_; }
    bool is_zero_ideal() const { return gens_.empty(); }

    // Cached reduced basis (engine fills it via groebner_basis).
    const std::vector<MultiPoly>* cached_basis(const MonomialOrder& ord) const;
    void cache_basis(const MonomialOrder& ord, std::vector<MultiPoly> basis) const;

    bool operator==(const IdealPresentation& o) const {
        return same_registry(reg_, o.reg_) && field_ == o.field_ && gens_ == o.gens_;
    }

    // Saturation (I : pi^infinity), cached after the first computation.
    std::shared_ptr<const IdealPresentation> cached_saturation() const { return sat_cache_; }
    void cache_saturation(std::shared_ptr<const IdealPresentation> sat) const {
        if (!sat_cache_) sat_cache_ = std::move(sat);
    }

  private:
    RegistryPtr reg_;
    Field field_;
    std::vector<MultiPoly> gens_;
    struct CacheSlot {
        MonomialOrder order;
        std::vector<MultiPoly> basis;
    };
    mutable std::vector<CacheSlot> cache_;
    mutable std::shared_ptr<const IdealPresentation> sat_cache_;
};

}  // namespace torext

#endif
