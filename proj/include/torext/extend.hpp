#ifndef TOREXT_EXTEND_HPP
#define TOREXT_EXTEND_HPP

#include "torext/neron.hpp"

namespace torext {

// Split f = alpha + sum v_l * g_l with alpha free of base coordinates and
// every g_l a monic base monomial vanishing at the origin.
struct DecomposedRelation {
    MultiPoly alpha_part;
    std::vector<std::pair<MultiPoly, MultiPoly>> g_terms;  // (v, g)
};

DecomposedRelation decompose(const MultiPoly& f);

enum class StoppingMode { ProductFiber, FirstModel };

inline std::string to_string(StoppingMode m) {
    return m == StoppingMode::ProductFiber ? "product" : "first-model";
}

struct ExtensionResult {
    std::uint32_t e = 0;
    RingMap sigma;  // base automorphism (A^n) or identity
    BasePresentation base_model;
    GroupPresentation group_model;
    TorsorPresentation torsor_model;
    Certificate certificate;
    StoppingMode mode = StoppingMode::ProductFiber;
};

// Primitivize every relation; optional pre-translation moving the marked
// point to (origin, identity) is applied by the caller before construction.
TorsorPresentation normalize_input(const TorsorPresentation& T);

// One-shot candidate over the e-fold blown-up base: substitute t -> pi^e t,
// primitivize each relation, saturate the ideal.
TorsorPresentation blowup_step(const TorsorPresentation& T, std::uint32_t e,
                               const GroebnerLimits& limits = {});

// verify_torsor of the candidate against the flat closure of its fiber group;
// product mode demands checks (1)-(5), first-model mode checks (1)-(4).
Certificate stopping_check(const TorsorPresentation& candidate, StoppingMode mode,
                           const GroebnerLimits& limits = {});
bool stopping_passed(const Certificate& cert, StoppingMode mode);

// Engineering bound subordinate to the iterative criterion:
// 1 + max t-content of the alpha parts of the e=0 candidate + max total
// base-degree of the relations.
std::uint32_t default_e_cap(const TorsorPresentation& T, const GroebnerLimits& limits = {});

// Main pipeline: iterate e = 0, 1, 2, ... until the stopping check passes.
ExtensionResult extend_torsor(const TorsorPresentation& T, StoppingMode mode,
                              std::optional<std::uint32_t> e_cap = std::nullopt,
                              const GroebnerLimits& limits = {});

// The model's generic fiber is the input pulled back along sigma and the
// blow-up substitution.
bool verify_generic_equivalence(const TorsorPresentation& input, const ExtensionResult& result,
                                const GroebnerLimits& limits = {});

}  // namespace torext

#endif
