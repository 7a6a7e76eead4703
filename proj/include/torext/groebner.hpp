#ifndef TOREXT_GROEBNER_HPP
#define TOREXT_GROEBNER_HPP

#include <vector>

#include "torext/ideal.hpp"
#include "torext/ringmap.hpp"

namespace torext {

enum class MembershipLevel {
    Strict,  // f lies in the ideal of k[pi, vars]
    Generic  // pi^m * f lies in the ideal for some m (membership after inverting pi)
};

struct GroebnerLimits {
    std::size_t max_basis = 5000;
    std::uint64_t max_degree = 200;
};

// Plain Buchberger with the coprime-lead and chain criteria; returns the
// reduced basis (monic, tail-reduced, sorted by decreasing leading monomial),
// which is unique per (ideal, order). Throws ResourceLimit past the caps.
std::vector<MultiPoly> groebner_basis(const IdealPresentation& I, const MonomialOrder& ord,
                                      const GroebnerLimits& limits = {});

// Remainder of full multivariate division by the reduced basis of I.
MultiPoly normal_form(const MultiPoly& f, const IdealPresentation& I, const MonomialOrder& ord,
                      const GroebnerLimits& limits = {});

bool ideal_membership(const MultiPoly& f, const IdealPresentation& I, MembershipLevel level,
                      const GroebnerLimits& limits = {});

// (I : pi^infinity), computed by adjoining w with 1 - w*pi and eliminating w.
IdealPresentation saturate_by_t(const IdealPresentation& I, const GroebnerLimits& limits = {});

// Generators of I intersected with the subring omitting the given variables.
IdealPresentation eliminate(const IdealPresentation& I, const std::vector<std::size_t>& vars,
                            const GroebnerLimits& limits = {});

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J, MembershipLevel level,
                 const GroebnerLimits& limits = {});

// Kernel of the map source-ring -> target-ring / I_target induced by m,
// computed via the graph ideal and elimination of the target variables.
IdealPresentation ring_map_kernel(const RingMap& m, const IdealPresentation& I_target,
                                  const GroebnerLimits& limits = {});

}  // namespace torext

#endif
