#include "torext/hopf.hpp"

#include <algorithm>

namespace torext {

RegistryPtr build_registry(const RegistrySpec& spec) {
    std::vector<VarInfo> vars;
    vars.push_back({spec.uniformizer, VarRole::Uniformizer, 0, 0, 0});
    for (const std::string& t : spec.base_coords) vars.push_back({t, VarRole::BaseCoord, 0, 0, 0});
    for (const auto& b : spec.blocks) {
        for (int i = 1; i <= b.d; ++i)
            for (int j = 1; j <= b.d; ++j)
                vars.push_back({entry_name(b.entry_role, i, j, b.copy), b.entry_role, i, j, b.copy});
        VarRole det_role = b.entry_role == VarRole::GroupEntry ? VarRole::DetInverseGroup
                                                               : VarRole::DetInverseTorsor;
        vars.push_back({det_inverse_name(det_role, b.copy), det_role, 0, 0, b.copy});
    }
    for (const std::string& a : spec.auxiliaries) vars.push_back({a, VarRole::Auxiliary, 0, 0, 0});
    return std::make_shared<VariableRegistry>(std::move(vars));
}

namespace {

MultiPoly entry_var(const RegistryPtr& reg, const Field& field, VarRole role, int i, int j,
                    int copy) {
    return MultiPoly::variable(reg, field, reg->entry(role, i, j, copy));
}

// Laplace expansion along the first remaining row.
MultiPoly minor_det(const RegistryPtr& reg, const Field& field, VarRole role, int copy,
                    const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.empty()) return MultiPoly::constant(reg, Scalar::one(field));
    if (rows.size() == 1) return entry_var(reg, field, role, rows[0], cols[0], copy);
    MultiPoly acc = MultiPoly::zero(reg, field);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<int> sub_cols;
        for (std::size_t l = 0; l < cols.size(); ++l)
            if (l != k) sub_cols.push_back(cols[l]);
        MultiPoly term =
            entry_var(reg, field, role, rows[0], cols[k], copy) * minor_det(reg, field, role, copy, sub_rows, sub_cols);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<int> all_indices(int d) {
    std::vector<int> v(d);
    for (int i = 0; i < d; ++i) v[i] = i + 1;
    return v;
}

}  // namespace

MultiPoly block_det(const RegistryPtr& reg, const Field& field, VarRole role, int copy) {
    int d = reg->block_dim(role, copy);
    if (d == 0) throw Error("registry has no matrix block for the requested role");
    return minor_det(reg, field, role, copy, all_indices(d), all_indices(d));
}

MultiPoly block_adjugate_entry(const RegistryPtr& reg, const Field& field, VarRole role, int i,
                               int j, int copy) {
    int d = reg->block_dim(role, copy);
    // adj_{ij} = (-1)^{i+j} * minor with row j and column i deleted
    std::vector<int> rows, cols;
    for (int r = 1; r <= d; ++r)
        if (r != j) rows.push_back(r);
    for (int c = 1; c <= d; ++c)
        if (c != i) cols.push_back(c);
    MultiPoly m = minor_det(reg, field, role, copy, rows, cols);
    return ((i + j) % 2 == 0) ? m : -m;
}

MultiPoly det_relation(const RegistryPtr& reg, const Field& field, VarRole entry_role, int copy) {
    VarRole det_role = entry_role == VarRole::GroupEntry ? VarRole::DetInverseGroup
                                                         : VarRole::DetInverseTorsor;
    MultiPoly D = MultiPoly::variable(reg, field, reg->det_inverse(det_role, copy));
    MultiPoly one = MultiPoly::constant(reg, Scalar::one(field));
    return D * block_det(reg, field, entry_role, copy) - one;
}

GroupPresentation::GroupPresentation(int d, RegistryPtr reg, IdealPresentation relations, Level level)
    : d_(d), reg_(std::move(reg)), rels_(std::move(relations)), level_(level) {
    if (!same_registry(reg_, rels_.registry()))
        throw RegistryMismatch("group relations live outside the group ring");
    if (reg_->block_dim(VarRole::GroupEntry) != d)
        throw Error("group registry does not carry a " + std::to_string(d) + "x" +
                    std::to_string(d) + " entry block");
    MultiPoly detrel = det_relation(reg_, rels_.field(), VarRole::GroupEntry);
    bool has_detrel = false;
    for (const MultiPoly& g : rels_.generators())
        if (g == detrel) has_detrel = true;
    if (!has_detrel) throw Error("group relations must contain the determinant relation");
}

RegistryPtr make_group_registry(int d) {
    RegistrySpec spec;
    spec.blocks.push_back({VarRole::GroupEntry, d, 0});
    return build_registry(spec);
}

RegistryPtr doubled_group_registry(const GroupPresentation& G) {
    RegistrySpec spec;
    spec.blocks.push_back({VarRole::GroupEntry, G.dim(), 1});
    spec.blocks.push_back({VarRole::GroupEntry, G.dim(), 2});
    return build_registry(spec);
}

RegistryPtr tripled_group_registry(const GroupPresentation& G) {
    RegistrySpec spec;
    spec.blocks.push_back({VarRole::GroupEntry, G.dim(), 1});
    spec.blocks.push_back({VarRole::GroupEntry, G.dim(), 2});
    spec.blocks.push_back({VarRole::GroupEntry, G.dim(), 3});
    return build_registry(spec);
}

namespace {

// rename map sending the plain group block into tensor-copy `copy`
RingMap copy_map(const GroupPresentation& G, const RegistryPtr& target, int copy) {
    const Field& field = G.field();
    const RegistryPtr& src = G.registry();
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < src->size(); ++v) {
        const VarInfo& info = src->var(v);
        switch (info.role) {
            case VarRole::Uniformizer:
                images.push_back(MultiPoly::variable(target, field, target->uniformizer()));
                break;
            case VarRole::GroupEntry:
                images.push_back(entry_var(target, field, VarRole::GroupEntry, info.row, info.col, copy));
                break;
            case VarRole::DetInverseGroup:
                images.push_back(MultiPoly::variable(
                    target, field, target->det_inverse(VarRole::DetInverseGroup, copy)));
                break;
            default:
                throw Error("group ring contains an unexpected variable role");
        }
    }
    return RingMap(src, target, field, std::move(images));
}

// Delta with images landing in copies (c1, c2) of the target ring.
RingMap delta_map(const GroupPresentation& G, const RegistryPtr& target, int c1, int c2) {
    const Field& field = G.field();
    const RegistryPtr& src = G.registry();
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < src->size(); ++v) {
        const VarInfo& info = src->var(v);
        switch (info.role) {
            case VarRole::Uniformizer:
                images.push_back(MultiPoly::variable(target, field, target->uniformizer()));
                break;
            case VarRole::GroupEntry: {
                MultiPoly acc = MultiPoly::zero(target, field);
                for (int r = 1; r <= G.dim(); ++r)
                    acc = acc + entry_var(target, field, VarRole::GroupEntry, info.row, r, c1) *
                                    entry_var(target, field, VarRole::GroupEntry, r, info.col, c2);
                images.push_back(acc);
                break;
            }
            case VarRole::DetInverseGroup: {
                MultiPoly d1 = MultiPoly::variable(target, field,
                                                   target->det_inverse(VarRole::DetInverseGroup, c1));
                MultiPoly d2 = MultiPoly::variable(target, field,
                                                   target->det_inverse(VarRole::DetInverseGroup, c2));
                images.push_back(d1 * d2);
                break;
            }
            default:
                throw Error("group ring contains an unexpected variable role");
        }
    }
    return RingMap(src, target, field, std::move(images));
}

}  // namespace

RingMap comultiplication_map(const GroupPresentation& G) {
    return delta_map(G, doubled_group_registry(G), 1, 2);
}

RingMap antipode_map(const GroupPresentation& G) {
    const Field& field = G.field();
    const RegistryPtr& reg = G.registry();
    MultiPoly D = MultiPoly::variable(reg, field, reg->det_inverse(VarRole::DetInverseGroup));
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < reg->size(); ++v) {
        const VarInfo& info = reg->var(v);
        switch (info.role) {
            case VarRole::Uniformizer:
                images.push_back(MultiPoly::variable(reg, field, v));
                break;
            case VarRole::GroupEntry:
                images.push_back(
                    D * block_adjugate_entry(reg, field, VarRole::GroupEntry, info.row, info.col));
                break;
            case VarRole::DetInverseGroup:
                images.push_back(block_det(reg, field, VarRole::GroupEntry));
                break;
            default:
                throw Error("group ring contains an unexpected variable role");
        }
    }
    return RingMap(reg, reg, field, std::move(images));
}

IdealPresentation doubled_relations(const GroupPresentation& G) {
    RegistryPtr dbl = doubled_group_registry(G);
    RingMap m1 = copy_map(G, dbl, 1);
    RingMap m2 = copy_map(G, dbl, 2);
    std::vector<MultiPoly> gens;
    for (const MultiPoly& g : G.relations().generators()) {
        gens.push_back(m1.apply(g));
        gens.push_back(m2.apply(g));
    }
    return IdealPresentation(dbl, G.field(), std::move(gens));
}

MultiPoly comultiplication_image(const MultiPoly& f, const GroupPresentation& G) {
    return comultiplication_map(G).apply(f);
}

MultiPoly counit_image(const MultiPoly& f, const GroupPresentation& G) {
    const RegistryPtr& reg = G.registry();
    const Field& field = G.field();
    if (!same_registry(f.registry(), reg))
        throw RegistryMismatch("polynomial is not in the group ring");
    std::vector<std::pair<std::size_t, Scalar>> values;
    for (std::size_t v = 0; v < reg->size(); ++v) {
        const VarInfo& info = reg->var(v);
        if (info.role == VarRole::GroupEntry)
            values.push_back({v, info.row == info.col ? Scalar::one(field) : Scalar::zero(field)});
        else if (info.role == VarRole::DetInverseGroup)
            values.push_back({v, Scalar::one(field)});
    }
    return f.substitute_scalars(values);
}

MultiPoly antipode_image(const MultiPoly& f, const GroupPresentation& G) {
    return antipode_map(G).apply(f);
}

Certificate verify_hopf(const GroupPresentation& G, const GroebnerLimits& limits) {
    Certificate cert;
    cert.label = "hopf";
    const Field& field = G.field();
    const RegistryPtr& reg = G.registry();
    Level lvl = G.level();
    MembershipLevel mlvl = G.membership_level();
    int d = G.dim();

    // (a) Hopf ideal: Delta(rel) in I (x) A + A (x) I
    {
        IdealPresentation dbl = doubled_relations(G);
        RingMap delta = comultiplication_map(G);
        std::string witness;
        for (const MultiPoly& rel : G.relations().generators()) {
            if (!ideal_membership(delta.apply(rel), dbl, mlvl, limits)) {
                witness = rel.to_string();
                break;
            }
        }
        cert.add("hopf-ideal", lvl, witness.empty() ? CheckStatus::Pass : CheckStatus::Fail, witness);
    }

    // (b) counit kills I
    {
        std::string witness;
        for (const MultiPoly& rel : G.relations().generators())
            if (!counit_image(rel, G).is_zero()) {
                witness = rel.to_string();
                break;
            }
        cert.add("counit", lvl, witness.empty() ? CheckStatus::Pass : CheckStatus::Fail, witness);
    }

    // (c) antipode preserves I
    {
        RingMap S = antipode_map(G);
        std::string witness;
        for (const MultiPoly& rel : G.relations().generators())
            if (!ideal_membership(S.apply(rel), G.relations(), mlvl, limits)) {
                witness = rel.to_string();
                break;
            }
        cert.add("antipode", lvl, witness.empty() ? CheckStatus::Pass : CheckStatus::Fail, witness);
    }

    // (d) coassociativity and counit laws as polynomial identities
    {
        RegistryPtr dbl = doubled_group_registry(G);
        RegistryPtr tpl = tripled_group_registry(G);
        RingMap delta = comultiplication_map(G);

        auto tpl_map = [&](bool left) {
            // left: Delta (x) id, otherwise id (x) Delta, both dbl -> tpl
            std::vector<MultiPoly> images;
            for (std::size_t v = 0; v < dbl->size(); ++v) {
                const VarInfo& info = dbl->var(v);
                if (info.role == VarRole::Uniformizer) {
                    images.push_back(MultiPoly::variable(tpl, field, tpl->uniformizer()));
                } else if (info.role == VarRole::GroupEntry) {
                    bool expand = left ? info.copy == 1 : info.copy == 2;
                    if (expand) {
                        int c1 = left ? 1 : 2, c2 = left ? 2 : 3;
                        MultiPoly acc = MultiPoly::zero(tpl, field);
                        for (int r = 1; r <= d; ++r)
                            acc = acc + entry_var(tpl, field, VarRole::GroupEntry, info.row, r, c1) *
                                            entry_var(tpl, field, VarRole::GroupEntry, r, info.col, c2);
                        images.push_back(acc);
                    } else {
                        int c = left ? 3 : 1;
                        images.push_back(entry_var(tpl, field, VarRole::GroupEntry, info.row, info.col, c));
                    }
                } else {  // det inverses
                    bool expand = left ? info.copy == 1 : info.copy == 2;
                    if (expand) {
                        int c1 = left ? 1 : 2, c2 = left ? 2 : 3;
                        images.push_back(
                            MultiPoly::variable(tpl, field, tpl->det_inverse(VarRole::DetInverseGroup, c1)) *
                            MultiPoly::variable(tpl, field, tpl->det_inverse(VarRole::DetInverseGroup, c2)));
                    } else {
                        int c = left ? 3 : 1;
                        images.push_back(
                            MultiPoly::variable(tpl, field, tpl->det_inverse(VarRole::DetInverseGroup, c)));
                    }
                }
            }
            return RingMap(dbl, tpl, field, std::move(images));
        };
        RingMap dxi = tpl_map(true);
        RingMap ixd = tpl_map(false);

        auto counit_side = [&](int killed_copy) {
            // dbl -> G ring killing one tensor factor through the counit
            std::vector<MultiPoly> images;
            for (std::size_t v = 0; v < dbl->size(); ++v) {
                const VarInfo& info = dbl->var(v);
                if (info.role == VarRole::Uniformizer) {
                    images.push_back(MultiPoly::variable(reg, field, reg->uniformizer()));
                } else if (info.copy == killed_copy) {
                    Scalar val = info.role == VarRole::GroupEntry && info.row != info.col
                                     ? Scalar::zero(field)
                                     : Scalar::one(field);
                    images.push_back(MultiPoly::constant(reg, val));
                } else if (info.role == VarRole::GroupEntry) {
                    images.push_back(entry_var(reg, field, VarRole::GroupEntry, info.row, info.col, 0));
                } else {
                    images.push_back(
                        MultiPoly::variable(reg, field, reg->det_inverse(VarRole::DetInverseGroup)));
                }
            }
            return RingMap(dbl, reg, field, std::move(images));
        };
        RingMap eps_left = counit_side(1);
        RingMap eps_right = counit_side(2);

        std::string witness;
        std::vector<MultiPoly> generators;
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) generators.push_back(entry_var(reg, field, VarRole::GroupEntry, i, j, 0));
        generators.push_back(MultiPoly::variable(reg, field, reg->det_inverse(VarRole::DetInverseGroup)));
        for (const MultiPoly& g : generators) {
            MultiPoly dg = delta.apply(g);
            if (dxi.apply(dg) != ixd.apply(dg) || eps_left.apply(dg) != g || eps_right.apply(dg) != g) {
                witness = g.to_string();
                break;
            }
        }
        cert.add("coassociativity-counit-laws", lvl,
                 witness.empty() ? CheckStatus::Pass : CheckStatus::Fail, witness);
    }

    // (e) antipode law modulo the determinant relation
    {
        IdealPresentation det_only(reg, field, {det_relation(reg, field, VarRole::GroupEntry)});
        MonomialOrder ord = MonomialOrder::grevlex(reg);
        RingMap S = antipode_map(G);
        std::string witness;
        for (int i = 1; i <= d && witness.empty(); ++i) {
            for (int j = 1; j <= d && witness.empty(); ++j) {
                MultiPoly lhs = MultiPoly::zero(reg, field);
                MultiPoly rhs = MultiPoly::zero(reg, field);
                for (int r = 1; r <= d; ++r) {
                    lhs = lhs + S.apply(entry_var(reg, field, VarRole::GroupEntry, i, r, 0)) *
                                    entry_var(reg, field, VarRole::GroupEntry, r, j, 0);
                    rhs = rhs + entry_var(reg, field, VarRole::GroupEntry, i, r, 0) *
                                    S.apply(entry_var(reg, field, VarRole::GroupEntry, r, j, 0));
                }
                Scalar delta_ij = i == j ? Scalar::one(field) : Scalar::zero(field);
                MultiPoly target = MultiPoly::constant(reg, delta_ij);
                if (!normal_form(lhs - target, det_only, ord, limits).is_zero() ||
                    !normal_form(rhs - target, det_only, ord, limits).is_zero())
                    witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
        cert.add("antipode-law", lvl, witness.empty() ? CheckStatus::Pass : CheckStatus::Fail, witness);
    }

    return cert;
}

void require_hopf(const GroupPresentation& G, const GroebnerLimits& limits) {
    Certificate cert = verify_hopf(G, limits);
    for (const CertificateEntry& e : cert.entries)
        if (e.status == CheckStatus::Fail) throw NotAHopfIdeal(e.name, e.witness);
}

GroupPresentation flat_closure(const GroupPresentation& G, const GroebnerLimits& limits) {
    const Field& field = G.field();
    const RegistryPtr& reg = G.registry();
    std::vector<MultiPoly> pretty;
    for (const MultiPoly& g : G.relations().generators()) pretty.push_back(g.primitivize().first);
    IdealPresentation pretty_ideal(reg, field, pretty);
    IdealPresentation sat = saturate_by_t(G.relations(), limits);
    std::vector<MultiPoly> gens = ideal_equal(pretty_ideal, sat, MembershipLevel::Strict, limits)
                                      ? pretty
                                      : sat.generators();
    MultiPoly detrel = det_relation(reg, field, VarRole::GroupEntry);
    bool has_det = false;
    for (const MultiPoly& g : gens)
        if (g == detrel) has_det = true;
    if (!has_det) gens.push_back(detrel);
    return GroupPresentation(G.dim(), reg, IdealPresentation(reg, field, std::move(gens)),
                             Level::Integral);
}

GroupPresentation special_fiber_group(const GroupPresentation& G) {
    const Field& field = G.field();
    const RegistryPtr& reg = G.registry();
    std::vector<MultiPoly> gens;
    for (const MultiPoly& g : G.relations().generators()) {
        MultiPoly r = g.reduce_mod_t();
        if (!r.is_zero()) gens.push_back(r);
    }
    MultiPoly detrel = det_relation(reg, field, VarRole::GroupEntry);
    bool has_det = false;
    for (const MultiPoly& g : gens)
        if (g == detrel) has_det = true;
    if (!has_det) gens.push_back(detrel);
    return GroupPresentation(G.dim(), reg, IdealPresentation(reg, field, std::move(gens)),
                             Level::Integral);
}

std::optional<long> group_order_diagnostic(const GroupPresentation& G,
                                           const GroebnerLimits& limits) {
    const RegistryPtr& reg = G.registry();
    IdealPresentation sat = saturate_by_t(G.relations(), limits);
    std::vector<MultiPoly> gb = groebner_basis(sat, MonomialOrder::grevlex(reg), limits);
    std::size_t u = reg->uniformizer();

    std::vector<Monomial> leads;
    MonomialOrder ord = MonomialOrder::grevlex(reg);
    for (const MultiPoly& g : gb) {
        Monomial m = g.leading_term(ord).mon;
        m.set_exp(u, 0);
        if (m.is_unit()) return 0;  // unit ideal after inverting pi
        leads.push_back(m);
    }

    // finite iff every non-pi variable is bounded by a pure-power lead
    std::vector<std::size_t> vars;
    std::vector<std::uint32_t> bounds;
    for (std::size_t v = 0; v < reg->size(); ++v) {
        if (v == u) continue;
        vars.push_back(v);
        std::uint32_t bound = 0;
        for (const Monomial& m : leads) {
            bool pure = m.exp(v) > 0;
            for (std::size_t w = 0; w < reg->size() && pure; ++w)
                if (w != v && m.exp(w) > 0) pure = false;
            if (pure && (bound == 0 || m.exp(v) < bound)) bound = m.exp(v);
        }
        if (bound == 0) return std::nullopt;
        bounds.push_back(bound);
    }

    long count = 0;
    Monomial probe(reg->size());
    auto is_standard = [&](const Monomial& m) {
        for (const Monomial& l : leads)
            if (l.divides(m)) return false;
        return true;
    };
    // enumerate exponent tuples below the pure-power bounds
    std::vector<std::uint32_t> exps(vars.size(), 0);
    while (true) {
        for (std::size_t k = 0; k < vars.size(); ++k) probe.set_exp(vars[k], exps[k]);
        if (is_standard(probe)) ++count;
        std::size_t k = 0;
        while (k < vars.size()) {
            if (++exps[k] < bounds[k]) break;
            exps[k] = 0;
            ++k;
        }
        if (k == vars.size()) break;
    }
    return count;
}

namespace {

GroupPresentation make_builtin(int d, std::vector<MultiPoly> extra, const RegistryPtr& reg,
                               const Field& field) {
    std::vector<MultiPoly> gens = std::move(extra);
    gens.push_back(det_relation(reg, field, VarRole::GroupEntry));
    return GroupPresentation(d, reg, IdealPresentation(reg, field, std::move(gens)), Level::Integral);
}

// unipotent pins: x_11 - 1, x_22 - 1, x_21 for the a -> [[1,a],[0,1]] embedding
std::vector<MultiPoly> unipotent_pins(const RegistryPtr& reg, const Field& field) {
    MultiPoly one = MultiPoly::constant(reg, Scalar::one(field));
    return {entry_var(reg, field, VarRole::GroupEntry, 1, 1, 0) - one,
            entry_var(reg, field, VarRole::GroupEntry, 2, 2, 0) - one,
            entry_var(reg, field, VarRole::GroupEntry, 2, 1, 0)};
}

std::int64_t parse_group_prime(const std::string& suffix, const Field& field,
                               const std::string& name) {
    if (suffix == "p") {
        if (field.kind() != FieldKind::PrimeField)
            throw CharacteristicMismatch("group '" + name + "' needs a prime field to infer p");
        return field.modulus();
    }
    try {
        std::size_t used = 0;
        std::int64_t p = std::stoll(suffix, &used);
        if (used != suffix.size() || p < 2) throw InputError("bad prime in group name");
        return p;
    } catch (const std::exception&) {
        throw InputError("unknown group '" + name + "'");
    }
}

void require_char(const Field& field, std::int64_t p, const std::string& name) {
    if (field.characteristic() != p)
        throw CharacteristicMismatch("group '" + name + "' requires characteristic " +
                                     std::to_string(p));
}

}  // namespace

GroupPresentation builtin_group(const std::string& name, const Field& field) {
    if (name == "GL1") return make_builtin(1, {}, make_group_registry(1), field);
    if (name == "GL2") return make_builtin(2, {}, make_group_registry(2), field);

    if (name.rfind("mu_", 0) == 0) {
        std::int64_t p = parse_group_prime(name.substr(3), field, name);
        RegistryPtr reg = make_group_registry(1);
        MultiPoly x = entry_var(reg, field, VarRole::GroupEntry, 1, 1, 0);
        MultiPoly one = MultiPoly::constant(reg, Scalar::one(field));
        return make_builtin(1, {x.pow(static_cast<std::uint64_t>(p)) - one}, reg, field);
    }
    if (name.rfind("alpha_", 0) == 0) {
        std::int64_t p = parse_group_prime(name.substr(6), field, name);
        require_char(field, p, name);
        RegistryPtr reg = make_group_registry(2);
        std::vector<MultiPoly> gens = unipotent_pins(reg, field);
        gens.push_back(entry_var(reg, field, VarRole::GroupEntry, 1, 2, 0).pow(static_cast<std::uint64_t>(p)));
        return make_builtin(2, std::move(gens), reg, field);
    }
    if (name.rfind("Z/", 0) == 0) {
        std::int64_t p = parse_group_prime(name.substr(2), field, name);
        require_char(field, p, name);
        RegistryPtr reg = make_group_registry(2);
        std::vector<MultiPoly> gens = unipotent_pins(reg, field);
        MultiPoly a = entry_var(reg, field, VarRole::GroupEntry, 1, 2, 0);
        gens.push_back(a.pow(static_cast<std::uint64_t>(p)) - a);
        return make_builtin(2, std::move(gens), reg, field);
    }
    if (name.rfind("M_", 0) == 0) {
        std::int64_t p = parse_group_prime(name.substr(2), field, name);
        require_char(field, p, name);
        RegistryPtr reg = make_group_registry(2);
        std::vector<MultiPoly> gens = unipotent_pins(reg, field);
        MultiPoly a = entry_var(reg, field, VarRole::GroupEntry, 1, 2, 0);
        MultiPoly pi = MultiPoly::variable(reg, field, reg->uniformizer());
        gens.push_back(pi.pow(static_cast<std::uint64_t>(p - 1)) * a.pow(static_cast<std::uint64_t>(p)) - a);
        return make_builtin(2, std::move(gens), reg, field);
    }
    throw InputError("unknown group '" + name + "'");
}

std::vector<std::string> builtin_group_names() {
    return {"GL1", "GL2", "mu_p", "alpha_p", "Z/p", "M_p"};
}

}  // namespace torext
