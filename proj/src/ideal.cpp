#include "torext/ideal.hpp"

namespace torext {

IdealPresentation::IdealPresentation(RegistryPtr reg, Field field, std::vector<MultiPoly> gens)
    : reg_(std::move(reg)), field_(field) {
    gens_.reserve(gens.size());
    for (MultiPoly& g : gens) {
        if (g.is_zero()) continue;
        if (!same_registry(g.registry(), reg_))
            throw RegistryMismatch("ideal generator lives outside the presentation ring");
        if (g.field() != field_) throw FieldMismatch();
        gens_.push_back(std::move(g));
    }
}

const std::vector<MultiPoly>* IdealPresentation::cached_basis(const MonomialOrder& ord) const {
    for (const CacheSlot& slot : cache_)
        if (slot.order == ord) return &slot.basis;
    return nullptr;
}

void IdealPresentation::cache_basis(const MonomialOrder& ord, std::vector<MultiPoly> basis) const {
    if (!cached_basis(ord)) cache_.push_back({ord, std::move(basis)});
}

}  // namespace torext
