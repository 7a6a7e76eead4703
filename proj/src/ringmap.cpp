#include "torext/ringmap.hpp"

namespace torext {

RingMap::RingMap(RegistryPtr source, RegistryPtr target, Field field, std::vector<MultiPoly> images)
    : src_(std::move(source)), tgt_(std::move(target)), field_(field), images_(std::move(images)) {
    if (images_.size() != src_->size()) throw Error("ring map needs one image per source variable");
    for (const MultiPoly& img : images_) {
        if (!same_registry(img.registry(), tgt_))
            throw RegistryMismatch("ring map image lives outside the target ring");
        if (img.field() != field_) throw FieldMismatch();
    }
}

RingMap RingMap::identity(RegistryPtr reg, Field field) {
    std::vector<MultiPoly> images;
    images.reserve(reg->size());
    for (std::size_t v = 0; v < reg->size(); ++v)
        images.push_back(MultiPoly::variable(reg, field, v));
    return RingMap(reg, reg, field, std::move(images));
}

RingMap RingMap::inclusion_by_name(RegistryPtr source, RegistryPtr target, Field field) {
    std::vector<MultiPoly> images;
    images.reserve(source->size());
    for (std::size_t v = 0; v < source->size(); ++v)
        images.push_back(MultiPoly::variable(target, field, target->index_of(source->name(v))));
    return RingMap(std::move(source), std::move(target), field, std::move(images));
}

void RingMap::set_image(std::size_t var, MultiPoly img) {
    if (!same_registry(img.registry(), tgt_))
        throw RegistryMismatch("ring map image lives outside the target ring");
    images_[var] = std::move(img);
}

MultiPoly RingMap::apply(const MultiPoly& f) const {
    if (!same_registry(f.registry(), src_))
        throw RegistryMismatch("polynomial is not in the map's source ring");
    // cache image powers per variable for this call
    std::vector<std::vector<MultiPoly>> powers(src_->size());
    auto power = [&](std::size_t v, std::uint32_t e) -> const MultiPoly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(MultiPoly::constant(tgt_, Scalar::one(field_)));
        while (cache.size() <= e) cache.push_back(cache.back() * images_[v]);
        return cache[e];
    };
    MultiPoly acc = MultiPoly::zero(tgt_, field_);
    for (const Term& t : f.terms()) {
        MultiPoly prod = MultiPoly::constant(tgt_, t.coeff);
        for (std::size_t v = 0; v < src_->size(); ++v)
            if (t.mon.exp(v) > 0) prod = prod * power(v, t.mon.exp(v));
        acc = acc + prod;
    }
    return acc;
}

RingMap RingMap::compose_after(const RingMap& first) const {
    if (!same_registry(first.tgt_, src_))
        throw RegistryMismatch("ring maps are not composable");
    std::vector<MultiPoly> images;
    images.reserve(first.src_->size());
    for (std::size_t v = 0; v < first.src_->size(); ++v) images.push_back(apply(first.images_[v]));
    return RingMap(first.src_, tgt_, field_, std::move(images));
}

bool RingMap::operator==(const RingMap& o) const {
    if (!same_registry(src_, o.src_) || !same_registry(tgt_, o.tgt_) || field_ != o.field_)
        return false;
    return images_ == o.images_;
}

std::string RingMap::describe() const {
    std::string out;
    for (std::size_t v = 0; v < src_->size(); ++v) {
        if (tgt_->has(src_->name(v))) {
            MultiPoly var = MultiPoly::variable(tgt_, field_, tgt_->index_of(src_->name(v)));
            if (images_[v] == var) continue;
        }
        if (!out.empty()) out += ", ";
        out += src_->name(v) + " -> " + images_[v].to_string();
    }
    return out.empty() ? "identity" : out;
}

MultiPoly transport(const MultiPoly& f, const RegistryPtr& target) {
    if (same_registry(f.registry(), target)) return f;
    std::vector<Term> terms;
    terms.reserve(f.n_terms());
    const RegistryPtr& src = f.registry();
    for (const Term& t : f.terms()) {
        Monomial m(target->size());
        for (std::size_t v = 0; v < src->size(); ++v) {
            std::uint32_t e = t.mon.exp(v);
            if (e == 0) continue;
            if (!target->has(src->name(v)))
                throw RegistryMismatch("variable '" + src->name(v) + "' missing from target registry");
            m.set_exp(target->index_of(src->name(v)), e);
        }
        terms.push_back({m, t.coeff});
    }
    return MultiPoly(target, f.field(), std::move(terms));
}

}  // namespace torext
