#include "torext/neron.hpp"

#include <algorithm>
#include <set>

namespace torext {

namespace {

MultiPoly entry_var(const RegistryPtr& reg, const Field& field, VarRole role, int i, int j,
                    int copy = 0) {
    return MultiPoly::variable(reg, field, reg->entry(role, i, j, copy));
}

// endomorphism t -> pi^e * t on any registry containing base coords
RingMap base_rescale_endo(const RegistryPtr& reg, const Field& field, std::uint32_t e) {
    MultiPoly pie = MultiPoly::variable(reg, field, reg->uniformizer(), e);
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < reg->size(); ++v) {
        MultiPoly var = MultiPoly::variable(reg, field, v);
        images.push_back(reg->var(v).role == VarRole::BaseCoord && e > 0 ? pie * var : var);
    }
    return RingMap(reg, reg, field, std::move(images));
}

bool is_uniformizer_gen(const MultiPoly& f) {
    if (f.n_terms() != 1) return false;
    const Term& t = f.terms()[0];
    std::size_t u = f.registry()->uniformizer();
    if (t.mon.exp(u) != 1) return false;
    return t.mon.total_degree() == 1;
}

// bare variable (single term c * v) -> its index
std::optional<std::size_t> bare_variable(const MultiPoly& f) {
    if (f.n_terms() != 1) return std::nullopt;
    const Term& t = f.terms()[0];
    if (t.mon.total_degree() != 1) return std::nullopt;
    for (std::size_t v = 0; v < f.registry()->size(); ++v)
        if (t.mon.exp(v) == 1) return v;
    return std::nullopt;
}

}  // namespace

std::pair<BasePresentation, RingMap> blowup_base_origin(const BasePresentation& X, std::uint32_t e) {
    const Field& field = X.field();
    RingMap subst = base_rescale_endo(X.registry(), field, e);
    std::vector<MultiPoly> rels;
    for (const MultiPoly& u : X.relations().generators())
        rels.push_back(subst.apply(u).primitivize().first);
    BasePresentation out(X.registry(), IdealPresentation(X.registry(), field, std::move(rels)),
                         Level::Integral);
    return {std::move(out), std::move(subst)};
}

IdealPresentation blowup_at_closed(const IdealPresentation& scheme, const IdealPresentation& center,
                                   const GroebnerLimits& limits) {
    const Field& field = scheme.field();
    const RegistryPtr& reg = scheme.registry();
    if (!same_registry(reg, center.registry()))
        throw RegistryMismatch("center lives outside the scheme's ring");
    MultiPoly pi = MultiPoly::variable(reg, field, reg->uniformizer());
    if (!ideal_membership(pi, center, MembershipLevel::Strict, limits))
        throw CenterNotInSpecialFiber();

    // chart generators: one z per center generator that is not pi itself
    struct ChartVar {
        MultiPoly gen;                      // center generator c
        std::optional<std::size_t> bare;    // c == variable v: rename z back to v
        std::string zname;
    };
    std::vector<ChartVar> charts;
    std::vector<VarInfo> ext_vars;
    for (std::size_t v = 0; v < reg->size(); ++v) ext_vars.push_back(reg->var(v));
    std::set<std::string> used;
    for (const VarInfo& v : ext_vars) used.insert(v.name);
    int k = 0;
    for (const MultiPoly& c : center.generators()) {
        if (is_uniformizer_gen(c)) continue;
        ChartVar cv{c, bare_variable(c), ""};
        std::string stem = cv.bare ? reg->name(*cv.bare) + "_bl" : "z_" + std::to_string(++k);
        while (used.count(stem)) stem += "_";
        used.insert(stem);
        cv.zname = stem;
        ext_vars.push_back({stem, VarRole::Auxiliary, 0, 0, 0});
        charts.push_back(std::move(cv));
    }
    if (charts.empty()) return scheme;  // center is (pi): nothing to do

    RegistryPtr ext = std::make_shared<VariableRegistry>(ext_vars);
    std::vector<MultiPoly> gens;
    for (const MultiPoly& g : scheme.generators()) gens.push_back(transport(g, ext));
    MultiPoly pie = MultiPoly::variable(ext, field, ext->uniformizer());
    for (const ChartVar& cv : charts) {
        MultiPoly z = MultiPoly::variable(ext, field, ext->index_of(cv.zname));
        gens.push_back(pie * z - transport(cv.gen, ext));
    }
    IdealPresentation graph(ext, field, std::move(gens));
    IdealPresentation sat = saturate_by_t(graph, limits);

    // eliminate the old bare variables; their chart coordinates take the name
    std::vector<std::size_t> elim;
    for (const ChartVar& cv : charts)
        if (cv.bare) elim.push_back(ext->index_of(reg->name(*cv.bare)));
    IdealPresentation cut = elim.empty() ? sat : eliminate(sat, elim, limits);

    // output registry: original shape, with non-bare chart variables appended
    std::vector<VarInfo> out_vars;
    for (std::size_t v = 0; v < reg->size(); ++v) out_vars.push_back(reg->var(v));
    for (const ChartVar& cv : charts)
        if (!cv.bare) out_vars.push_back({cv.zname, VarRole::Auxiliary, 0, 0, 0});
    RegistryPtr out_reg = std::make_shared<VariableRegistry>(out_vars);

    // rename z back to the bare variable's name
    std::vector<MultiPoly> out_gens;
    for (const MultiPoly& g : cut.generators()) {
        std::vector<Term> terms;
        for (const Term& t : g.terms()) {
            Monomial m(out_reg->size());
            for (std::size_t v = 0; v < ext->size(); ++v) {
                std::uint32_t exp = t.mon.exp(v);
                if (exp == 0) continue;
                std::string name = ext->name(v);
                for (const ChartVar& cv : charts)
                    if (cv.bare && cv.zname == name) name = reg->name(*cv.bare);
                m.set_exp(out_reg->index_of(name), exp);
            }
            terms.push_back({m, t.coeff});
        }
        out_gens.push_back(MultiPoly(out_reg, field, std::move(terms)));
    }
    return IdealPresentation(out_reg, field, std::move(out_gens));
}

namespace {

// x_ij -> delta_ij + pi*(x_ij - delta_ij) on the block of the given role
RingMap deviation_rescale_endo(const RegistryPtr& reg, const Field& field, VarRole entry_role) {
    MultiPoly pi = MultiPoly::variable(reg, field, reg->uniformizer());
    MultiPoly one = MultiPoly::constant(reg, Scalar::one(field));
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < reg->size(); ++v) {
        const VarInfo& info = reg->var(v);
        MultiPoly var = MultiPoly::variable(reg, field, v);
        if (info.role == entry_role)
            images.push_back(info.row == info.col ? one + pi * (var - one) : pi * var);
        else
            images.push_back(var);
    }
    return RingMap(reg, reg, field, std::move(images));
}

// relations of the blown-up presentation: substitute, primitivize, keep the
// det relation verbatim, saturate, prefer the primitivized generators when
// they already generate the saturation
std::vector<MultiPoly> section_blowup_relations(const std::vector<MultiPoly>& rels,
                                                const std::vector<MultiPoly>& extra_context,
                                                const MultiPoly& detrel, const RingMap& subst,
                                                const Field& field, const RegistryPtr& reg,
                                                const GroebnerLimits& limits,
                                                std::optional<std::size_t> det_var) {
    std::vector<MultiPoly> cand;
    for (const MultiPoly& f : rels) {
        if (f == detrel) continue;
        if (det_var)
            for (const Term& t : f.terms())
                if (t.mon.exp(*det_var) > 0)
                    throw Error("section blow-up: relations may not involve the det-inverse");
        MultiPoly g = subst.apply(f);
        if (!g.is_zero()) cand.push_back(g.primitivize().first);
    }
    cand.push_back(detrel);
    std::vector<MultiPoly> context = cand;
    context.insert(context.end(), extra_context.begin(), extra_context.end());
    IdealPresentation cand_ideal(reg, field, context);
    IdealPresentation sat = saturate_by_t(cand_ideal, limits);
    if (ideal_equal(cand_ideal, sat, MembershipLevel::Strict, limits)) return cand;
    std::vector<MultiPoly> out = sat.generators();
    bool has_det = false;
    for (const MultiPoly& g : out)
        if (g == detrel) has_det = true;
    if (!has_det) out.push_back(detrel);
    return out;
}

}  // namespace

GroupPresentation blowup_group_at_unit_section(const GroupPresentation& G,
                                               const GroebnerLimits& limits) {
    const Field& field = G.field();
    const RegistryPtr& reg = G.registry();
    for (const MultiPoly& f : G.relations().generators())
        if (!counit_image(f, G).is_zero()) throw SectionNotInSpecialFiber();
    RingMap subst = deviation_rescale_endo(reg, field, VarRole::GroupEntry);
    MultiPoly detrel = det_relation(reg, field, VarRole::GroupEntry);
    std::vector<MultiPoly> gens = section_blowup_relations(
        G.relations().generators(), {}, detrel, subst, field, reg, limits,
        reg->det_inverse(VarRole::DetInverseGroup));
    return GroupPresentation(G.dim(), reg, IdealPresentation(reg, field, std::move(gens)),
                             Level::Integral);
}

std::pair<TorsorPresentation, GroupPresentation> blowup_torsor_at_section(
    const TorsorPresentation& T, const GroupPresentation& G, const GroebnerLimits& limits) {
    const Field& field = T.field();
    const RegistryPtr& reg = T.registry();

    // the identity section must land inside the special fiber: evaluating the
    // relations at y = identity has to vanish modulo (pi) + base relations
    {
        std::vector<std::pair<std::size_t, Scalar>> ident;
        for (std::size_t v = 0; v < reg->size(); ++v) {
            const VarInfo& info = reg->var(v);
            if (info.role == VarRole::TorsorEntry)
                ident.push_back({v, info.row == info.col ? Scalar::one(field) : Scalar::zero(field)});
            else if (info.role == VarRole::DetInverseTorsor)
                ident.push_back({v, Scalar::one(field)});
        }
        std::vector<MultiPoly> base_fiber;
        for (const MultiPoly& u : T.base().relations().generators()) {
            MultiPoly r = u.reduce_mod_t();
            if (!r.is_zero()) base_fiber.push_back(transport(r, reg));
        }
        IdealPresentation base_fiber_ideal(reg, field, std::move(base_fiber));
        for (const MultiPoly& f : T.relations().generators()) {
            MultiPoly v = f.substitute_scalars(ident).reduce_mod_t();
            if (!ideal_membership(v, base_fiber_ideal, MembershipLevel::Strict, limits))
                throw SectionNotInSpecialFiber();
        }
    }

    RingMap subst = deviation_rescale_endo(reg, field, VarRole::TorsorEntry);
    MultiPoly detrel = det_relation(reg, field, VarRole::TorsorEntry);
    std::vector<MultiPoly> gens = section_blowup_relations(
        T.relations().generators(), T.base_relations_in_total(), detrel, subst, field, reg, limits,
        reg->det_inverse(VarRole::DetInverseTorsor));
    TorsorPresentation blown(T.base(), T.dim(), reg, IdealPresentation(reg, field, std::move(gens)),
                             Level::Integral);
    return {std::move(blown), blowup_group_at_unit_section(G, limits)};
}

RingMap affine_space_renormalization(const RegistryPtr& base_reg, const Field& field,
                                     std::uint32_t m) {
    return base_rescale_endo(base_reg, field, m);
}

bool affine_blowup_kernel_check(int n, std::uint32_t m, const Field& field,
                                const GroebnerLimits& limits) {
    RegistrySpec src_spec;
    for (int i = 1; i <= n; ++i) src_spec.base_coords.push_back("x_" + std::to_string(i));
    for (int i = 1; i <= n; ++i) src_spec.base_coords.push_back("y_" + std::to_string(i));
    RegistryPtr src = build_registry(src_spec);

    RegistrySpec tgt_spec;
    for (int i = 1; i <= n; ++i) tgt_spec.base_coords.push_back("t_" + std::to_string(i));
    RegistryPtr tgt = build_registry(tgt_spec);

    MultiPoly pim = MultiPoly::variable(tgt, field, tgt->uniformizer(), m);
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < src->size(); ++v) {
        const std::string& name = src->name(v);
        if (v == src->uniformizer()) {
            images.push_back(MultiPoly::variable(tgt, field, tgt->uniformizer()));
        } else if (name[0] == 'x') {
            MultiPoly t = MultiPoly::variable(tgt, field, tgt->index_of("t" + name.substr(1)));
            images.push_back(pim * t);
        } else {
            images.push_back(MultiPoly::variable(tgt, field, tgt->index_of("t" + name.substr(1))));
        }
    }
    RingMap phi(src, tgt, field, std::move(images));
    IdealPresentation kernel = ring_map_kernel(phi, IdealPresentation::zero(tgt, field), limits);

    std::vector<MultiPoly> graph;
    MultiPoly pim_src = MultiPoly::variable(src, field, src->uniformizer(), m);
    for (int i = 1; i <= n; ++i) {
        MultiPoly x = MultiPoly::variable(src, field, src->index_of("x_" + std::to_string(i)));
        MultiPoly y = MultiPoly::variable(src, field, src->index_of("y_" + std::to_string(i)));
        graph.push_back(x - pim_src * y);
    }
    IdealPresentation expected(src, field, std::move(graph));
    return ideal_equal(kernel, expected, MembershipLevel::Strict, limits);
}

MultiPoly rescale_entry_down(const MultiPoly& f, std::size_t var) {
    if (f.is_zero()) return f;
    const RegistryPtr& reg = f.registry();
    std::uint32_t top = 0;
    for (const Term& t : f.terms()) top = std::max(top, t.mon.exp(var));
    std::size_t u = reg->uniformizer();
    std::vector<Term> terms;
    for (const Term& t : f.terms()) {
        Monomial m = t.mon;
        std::uint32_t e = m.exp(u) + (top - m.exp(var));
        if (e > Monomial::kMaxExponent) throw ExponentOverflow();
        m.set_exp(u, e);
        terms.push_back({m, t.coeff});
    }
    return MultiPoly(reg, f.field(), std::move(terms)).primitivize().first;
}

}  // namespace torext
