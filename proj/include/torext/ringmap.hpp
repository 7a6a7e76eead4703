#ifndef TOREXT_RINGMAP_HPP
#define TOREXT_RINGMAP_HPP

#include <string>
#include <vector>

#include "torext/poly.hpp"

namespace torext {

// A ring morphism source -> target, given by an image polynomial for each
// source variable. Realizes the point morphisms alpha, the blow-up
// rescalings and the base automorphisms sigma.
class RingMap {
  public:
    RingMap(RegistryPtr source, RegistryPtr target, Field field, std::vector<MultiPoly> images);

    static RingMap identity(RegistryPtr reg, Field field);
    // Map matching variables by name; every source variable must exist in the
    // target registry.
    static RingMap inclusion_by_name(RegistryPtr source, RegistryPtr target, Field field);

    const RegistryPtr& source() const { return src_; }
    const RegistryPtr& target() const { return tgt_; }
    const Field& field() const { return field_; }
    const MultiPoly& image(std::size_t var) const { return images_[var]; }

    // Replace the image of one variable (builder-style tweak).
    void set_image(std::size_t var, MultiPoly img);

    MultiPoly apply(const MultiPoly& f) const;

    // this->apply after first.apply (composition source(first) -> target(this))
    RingMap compose_after(const RingMap& first) const;

    bool operator==(const RingMap& o) const;

    // "t_1 -> pi*t_1, t_2 -> t_2" style description of non-identity images.
    std::string describe() const;

  private:
    RegistryPtr src_;
    RegistryPtr tgt_;
    Field field_;
    std::vector<MultiPoly> images_;
};

// Transport f into another registry by matching variable names.
MultiPoly transport(const MultiPoly& f, const RegistryPtr& target);

}  // namespace torext

#endif
