#ifndef TOREXT_NERON_HPP
#define TOREXT_NERON_HPP

#include "torext/torsor.hpp"

namespace torext {

// e-fold Neron blow-up of the base at the origin of its special fiber:
// substitute t -> pi^e * t and primitivize each relation. The returned map is
// the substitution (used to transport torsors).
std::pair<BasePresentation, RingMap> blowup_base_origin(const BasePresentation& X, std::uint32_t e);

// Neron blow-up of an affine scheme at a closed subscheme of its special
// fiber, on the chart where the center is generated by pi: adjoin z_i =
// c_i / pi via graph relations pi*z_i - c_i and saturate. Center generators
// that are bare variables have their chart coordinate renamed back to the
// variable (the old variable is eliminated); plain pi generators contribute
// nothing. Throws CenterNotInSpecialFiber when pi is not in the center.
IdealPresentation blowup_at_closed(const IdealPresentation& scheme, const IdealPresentation& center,
                                   const GroebnerLimits& limits = {});

// Blow-up of a group at the unit section of its special fiber, keeping the
// GL_d presentation: the deviation from the identity matrix is rescaled by
// pi (x_ij -> delta_ij + pi*(x_ij - delta_ij)), relations primitivized and
// the ideal saturated. Sound for presentations whose rescaled points still
// multiply inside GL_d; certify the output with verify_hopf.
GroupPresentation blowup_group_at_unit_section(const GroupPresentation& G,
                                               const GroebnerLimits& limits = {});

// Blow-up of a torsor at the image of the identity section of its special
// fiber, together with the matching group blow-up at the unit section.
std::pair<TorsorPresentation, GroupPresentation> blowup_torsor_at_section(
    const TorsorPresentation& T, const GroupPresentation& G, const GroebnerLimits& limits = {});

// The automorphism of the generic fiber of A^n along which a torsor must be
// pulled back so that the e-fold blow-up of A^n is replaced by A^n itself:
// t_i -> pi^m * t_i on the given base registry.
RingMap affine_space_renormalization(const RegistryPtr& base_reg, const Field& field,
                                     std::uint32_t m);

// Certifies via ring_map_kernel that the m-fold blow-up presentation of A^n
// is isomorphic to A^n: the kernel of x_i -> pi^m t_i, y_i -> t_i equals the
// graph ideal (x_i - pi^m y_i).
bool affine_blowup_kernel_check(int n, std::uint32_t m, const Field& field,
                                const GroebnerLimits& limits = {});

// pi^K * f(var -> var/pi) with K the top var-degree, primitivized; the
// blow-down rescaling used by the contracted-product description.
MultiPoly rescale_entry_down(const MultiPoly& f, std::size_t var);

}  // namespace torext

#endif
