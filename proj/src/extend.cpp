#include "torext/extend.hpp"

#include <algorithm>

namespace torext {

DecomposedRelation decompose(const MultiPoly& f) {
    const RegistryPtr& reg = f.registry();
    const Field& field = f.field();
    DecomposedRelation out;
    out.alpha_part = f.specialize_origin();
    for (const Term& t : f.terms()) {
        Monomial base_mon(reg->size());
        Monomial rest_mon(reg->size());
        bool has_base = false;
        for (std::size_t v = 0; v < reg->size(); ++v) {
            if (t.mon.exp(v) == 0) continue;
            if (reg->var(v).role == VarRole::BaseCoord) {
                base_mon.set_exp(v, t.mon.exp(v));
                has_base = true;
            } else {
                rest_mon.set_exp(v, t.mon.exp(v));
            }
        }
        if (!has_base) continue;
        MultiPoly v_part(reg, field, {{rest_mon, t.coeff}});
        MultiPoly g_part(reg, field, {{base_mon, Scalar::one(field)}});
        out.g_terms.push_back({std::move(v_part), std::move(g_part)});
    }
    return out;
}

TorsorPresentation normalize_input(const TorsorPresentation& T) {
    const Field& field = T.field();
    const RegistryPtr& reg = T.registry();
    std::vector<MultiPoly> gens;
    for (const MultiPoly& f : T.relations().generators()) {
        if (f.is_zero()) throw ZeroRelation();
        gens.push_back(f.primitivize().first);
    }
    std::vector<MultiPoly> base_gens;
    for (const MultiPoly& u : T.base().relations().generators()) {
        if (u.is_zero()) throw ZeroRelation();
        base_gens.push_back(u.primitivize().first);
    }
    BasePresentation base(T.base().registry(),
                          IdealPresentation(T.base().registry(), field, std::move(base_gens)),
                          T.base().level());
    return TorsorPresentation(std::move(base), T.dim(), reg,
                              IdealPresentation(reg, field, std::move(gens)), T.level());
}

TorsorPresentation blowup_step(const TorsorPresentation& T, std::uint32_t e,
                               const GroebnerLimits& limits) {
    const Field& field = T.field();
    const RegistryPtr& reg = T.registry();
    auto [base_model, base_subst] = blowup_base_origin(T.base(), e);

    // same substitution on the total ring
    MultiPoly pie = MultiPoly::variable(reg, field, reg->uniformizer(), e);
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < reg->size(); ++v) {
        MultiPoly var = MultiPoly::variable(reg, field, v);
        images.push_back(reg->var(v).role == VarRole::BaseCoord && e > 0 ? pie * var : var);
    }
    RingMap subst(reg, reg, field, std::move(images));

    MultiPoly detrel = det_relation(reg, field, VarRole::TorsorEntry);
    std::vector<MultiPoly> cand;
    for (const MultiPoly& f : T.relations().generators()) {
        if (f == detrel) continue;
        cand.push_back(subst.apply(f).primitivize().first);
    }
    cand.push_back(detrel);

    // cut the R-torsion of the full ideal
    std::vector<MultiPoly> combined = cand;
    for (const MultiPoly& u : base_model.relations().generators())
        combined.push_back(transport(u, reg));
    IdealPresentation combined_ideal(reg, field, combined);
    IdealPresentation sat = saturate_by_t(combined_ideal, limits);
    std::vector<MultiPoly> gens;
    if (ideal_equal(combined_ideal, sat, MembershipLevel::Strict, limits)) {
        gens = std::move(cand);
    } else {
        gens = sat.generators();
        bool has_det = false;
        for (const MultiPoly& g : gens)
            if (g == detrel) has_det = true;
        if (!has_det) gens.push_back(detrel);
    }
    return TorsorPresentation(std::move(base_model), T.dim(), reg,
                              IdealPresentation(reg, field, std::move(gens)), Level::Integral);
}

Certificate stopping_check(const TorsorPresentation& candidate, StoppingMode mode,
                           const GroebnerLimits& limits) {
    GroupPresentation model = flat_closure(fiber_group(candidate), limits);
    Certificate cert = verify_torsor(candidate, model, limits);
    if (mode == StoppingMode::FirstModel && cert.label == "generic torsor with R-flat model candidate")
        cert.label += " (first-model stopping criterion)";
    return cert;
}

bool stopping_passed(const Certificate& cert, StoppingMode mode) {
    bool core = cert.passed("comodule") && cert.passed("psi-well-defined") &&
                cert.passed("psi-mutual-inverse") && cert.passed("saturated");
    if (mode == StoppingMode::FirstModel) return core;
    return core && cert.passed("product-special-fiber");
}

std::uint32_t default_e_cap(const TorsorPresentation& T, const GroebnerLimits& limits) {
    TorsorPresentation cand = blowup_step(normalize_input(T), 0, limits);
    std::uint32_t max_content = 0;
    std::uint64_t max_base_degree = 0;
    for (const MultiPoly& f : cand.relations().generators()) {
        DecomposedRelation dec = decompose(f);
        if (!dec.alpha_part.is_zero())
            max_content = std::max(max_content, dec.alpha_part.t_content());
        for (const auto& [v, g] : dec.g_terms) max_base_degree = std::max(max_base_degree, g.total_degree());
    }
    return 1 + max_content + static_cast<std::uint32_t>(max_base_degree);
}

ExtensionResult extend_torsor(const TorsorPresentation& T, StoppingMode mode,
                              std::optional<std::uint32_t> e_cap, const GroebnerLimits& limits) {
    TorsorPresentation norm = normalize_input(T);
    std::uint32_t cap = e_cap ? *e_cap : default_e_cap(T, limits);

    Certificate last_cert;
    std::optional<TorsorPresentation> last_candidate;
    for (std::uint32_t e = 0; e <= cap; ++e) {
        TorsorPresentation candidate = blowup_step(norm, e, limits);
        GroupPresentation model = flat_closure(fiber_group(candidate), limits);
        Certificate cert = verify_torsor(candidate, model, limits);
        if (stopping_passed(cert, mode)) {
            RingMap sigma = norm.base().is_free()
                                ? affine_space_renormalization(norm.base().registry(), T.field(), e)
                                : RingMap::identity(norm.base().registry(), T.field());
            return {e,
                    std::move(sigma),
                    candidate.base(),
                    std::move(model),
                    candidate,
                    std::move(cert),
                    mode};
        }
        last_cert = std::move(cert);
        last_candidate = std::move(candidate);
    }

    std::string diag = "no certified model up to e = " + std::to_string(cap) + " in " +
                       to_string(mode) + " mode\n";
    if (last_candidate) {
        diag += "relation t-contents at e = " + std::to_string(cap) + ":";
        for (const MultiPoly& f : last_candidate->relations().generators())
            diag += " " + std::to_string(f.is_zero() ? 0 : f.t_content());
        diag += "\nfailing checks:\n";
        for (const CertificateEntry& entry : last_cert.entries)
            if (entry.status == CheckStatus::Fail) diag += "  " + entry.to_string() + "\n";
    }
    throw CapExceeded(diag);
}

bool verify_generic_equivalence(const TorsorPresentation& input, const ExtensionResult& result,
                                const GroebnerLimits& limits) {
    const Field& field = input.field();
    const RegistryPtr& reg = input.registry();
    // transport the input relations along the blow-up substitution t -> pi^e t
    MultiPoly pie = MultiPoly::variable(reg, field, reg->uniformizer(), result.e);
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < reg->size(); ++v) {
        MultiPoly var = MultiPoly::variable(reg, field, v);
        images.push_back(reg->var(v).role == VarRole::BaseCoord && result.e > 0 ? pie * var : var);
    }
    RingMap subst(reg, reg, field, std::move(images));

    const RegistryPtr& model_reg = result.torsor_model.registry();
    std::vector<MultiPoly> transported;
    for (const MultiPoly& f : input.combined_relations().generators())
        transported.push_back(transport(subst.apply(f), model_reg));
    IdealPresentation lhs(model_reg, field, std::move(transported));
    return ideal_equal(lhs, result.torsor_model.combined_relations(), MembershipLevel::Generic,
                       limits);
}

}  // namespace torext
