#include "torext/torsor.hpp"

namespace torext {

namespace {

MultiPoly entry_var(const RegistryPtr& reg, const Field& field, VarRole role, int i, int j,
                    int copy = 0) {
    return MultiPoly::variable(reg, field, reg->entry(role, i, j, copy));
}

// evaluate at the distinguished point: base coords 0, entries identity,
// det-inverses 1; the result is a polynomial in pi alone
MultiPoly at_point(const MultiPoly& f) {
    const RegistryPtr& reg = f.registry();
    std::vector<std::pair<std::size_t, Scalar>> values;
    for (std::size_t v = 0; v < reg->size(); ++v) {
        const VarInfo& info = reg->var(v);
        switch (info.role) {
            case VarRole::BaseCoord:
                values.push_back({v, Scalar::zero(f.field())});
                break;
            case VarRole::GroupEntry:
            case VarRole::TorsorEntry:
                values.push_back({v, info.row == info.col ? Scalar::one(f.field())
                                                          : Scalar::zero(f.field())});
                break;
            case VarRole::DetInverseGroup:
            case VarRole::DetInverseTorsor:
                values.push_back({v, Scalar::one(f.field())});
                break;
            default:
                break;
        }
    }
    return f.substitute_scalars(values);
}

}  // namespace

BasePresentation::BasePresentation(RegistryPtr reg, IdealPresentation relations, Level level)
    : reg_(std::move(reg)), rels_(std::move(relations)), level_(level) {
    if (!same_registry(reg_, rels_.registry()))
        throw RegistryMismatch("base relations live outside the base ring");
    for (std::size_t v = 0; v < reg_->size(); ++v) {
        VarRole r = reg_->var(v).role;
        if (r != VarRole::Uniformizer && r != VarRole::BaseCoord)
            throw Error("base registry may only contain the uniformizer and base coordinates");
    }
    for (const MultiPoly& u : rels_.generators())
        if (!at_point(u).is_zero())
            throw NotPointed("the origin does not satisfy base relation " + u.to_string());
}

TorsorPresentation::TorsorPresentation(BasePresentation base, int d, RegistryPtr reg,
                                       IdealPresentation relations, Level level)
    : base_(std::move(base)), d_(d), reg_(std::move(reg)), rels_(std::move(relations)), level_(level) {
    if (!same_registry(reg_, rels_.registry()))
        throw RegistryMismatch("torsor relations live outside the total ring");
    if (reg_->block_dim(VarRole::TorsorEntry) != d)
        throw Error("torsor registry does not carry a complete entry block");
    for (std::size_t v = 0; v < base_.registry()->size(); ++v)
        if (!reg_->has(base_.registry()->name(v)))
            throw RegistryMismatch("total ring is missing base variable '" +
                                   base_.registry()->name(v) + "'");
    MultiPoly detrel = det_relation(reg_, rels_.field(), VarRole::TorsorEntry);
    bool has_det = false;
    for (const MultiPoly& g : rels_.generators())
        if (g == detrel) has_det = true;
    if (!has_det) throw Error("torsor relations must contain the determinant relation");
    for (const MultiPoly& f : rels_.generators())
        if (!at_point(f).is_zero())
            throw NotPointed("the identity over the origin does not satisfy " + f.to_string());
}

std::vector<MultiPoly> TorsorPresentation::base_relations_in_total() const {
    std::vector<MultiPoly> out;
    for (const MultiPoly& u : base_.relations().generators()) out.push_back(transport(u, reg_));
    return out;
}

IdealPresentation TorsorPresentation::combined_relations() const {
    std::vector<MultiPoly> gens = base_relations_in_total();
    for (const MultiPoly& f : rels_.generators()) gens.push_back(f);
    return IdealPresentation(reg_, rels_.field(), std::move(gens));
}

RegistryPtr make_base_registry(const std::vector<std::string>& coords,
                               const std::string& uniformizer) {
    RegistrySpec spec;
    spec.uniformizer = uniformizer;
    spec.base_coords = coords;
    return build_registry(spec);
}

RegistryPtr make_torsor_registry(const RegistryPtr& base_reg, int d) {
    RegistrySpec spec;
    spec.uniformizer = base_reg->name(base_reg->uniformizer());
    for (std::size_t v : base_reg->indices_with_role(VarRole::BaseCoord))
        spec.base_coords.push_back(base_reg->name(v));
    spec.blocks.push_back({VarRole::TorsorEntry, d, 0});
    return build_registry(spec);
}

BasePresentation affine_base(int r, const Field& field, const std::string& uniformizer) {
    std::vector<std::string> coords;
    for (int i = 1; i <= r; ++i) coords.push_back("t_" + std::to_string(i));
    RegistryPtr reg = make_base_registry(coords, uniformizer);
    return BasePresentation(reg, IdealPresentation::zero(reg, field), Level::Integral);
}

GroupPresentation fiber_group(const TorsorPresentation& T) {
    const Field& field = T.field();
    const RegistryPtr& src = T.registry();
    RegistryPtr grp = make_group_registry(T.dim());
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < src->size(); ++v) {
        const VarInfo& info = src->var(v);
        switch (info.role) {
            case VarRole::Uniformizer:
                images.push_back(MultiPoly::variable(grp, field, grp->uniformizer()));
                break;
            case VarRole::BaseCoord:
                images.push_back(MultiPoly::zero(grp, field));
                break;
            case VarRole::TorsorEntry:
                images.push_back(entry_var(grp, field, VarRole::GroupEntry, info.row, info.col));
                break;
            case VarRole::DetInverseTorsor:
                images.push_back(
                    MultiPoly::variable(grp, field, grp->det_inverse(VarRole::DetInverseGroup)));
                break;
            default:
                throw Error("torsor ring contains an unexpected variable role");
        }
    }
    RingMap q(src, grp, field, images);
    std::vector<MultiPoly> gens;
    for (const MultiPoly& f : T.relations().generators()) {
        MultiPoly g = q.apply(f);
        if (g.is_zero()) continue;
        if (!at_point(g).is_zero()) throw EmptyFiber();
        gens.push_back(g);
    }
    return GroupPresentation(T.dim(), grp, IdealPresentation(grp, field, std::move(gens)),
                             T.level());
}

RegistryPtr coaction_registry(const TorsorPresentation& T) {
    RegistrySpec spec;
    const RegistryPtr& base = T.base().registry();
    spec.uniformizer = base->name(base->uniformizer());
    for (std::size_t v : base->indices_with_role(VarRole::BaseCoord))
        spec.base_coords.push_back(base->name(v));
    spec.blocks.push_back({VarRole::GroupEntry, T.dim(), 0});
    spec.blocks.push_back({VarRole::TorsorEntry, T.dim(), 0});
    return build_registry(spec);
}

namespace {

// rho-style map into a ring holding group copy `gcopy` and torsor copy
// `tcopy`: y_ij -> sum_r x_ir y_rj, Dy -> D * Dy
RingMap coaction_like_map(const TorsorPresentation& T, const RegistryPtr& target, int gcopy,
                          int tcopy) {
    const Field& field = T.field();
    const RegistryPtr& src = T.registry();
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < src->size(); ++v) {
        const VarInfo& info = src->var(v);
        switch (info.role) {
            case VarRole::Uniformizer:
                images.push_back(MultiPoly::variable(target, field, target->uniformizer()));
                break;
            case VarRole::BaseCoord:
                images.push_back(MultiPoly::variable(target, field, target->index_of(src->name(v))));
                break;
            case VarRole::TorsorEntry: {
                MultiPoly acc = MultiPoly::zero(target, field);
                for (int r = 1; r <= T.dim(); ++r)
                    acc = acc + entry_var(target, field, VarRole::GroupEntry, info.row, r, gcopy) *
                                    entry_var(target, field, VarRole::TorsorEntry, r, info.col, tcopy);
                images.push_back(acc);
                break;
            }
            case VarRole::DetInverseTorsor:
                images.push_back(
                    MultiPoly::variable(target, field, target->det_inverse(VarRole::DetInverseGroup, gcopy)) *
                    MultiPoly::variable(target, field, target->det_inverse(VarRole::DetInverseTorsor, tcopy)));
                break;
            default:
                throw Error("torsor ring contains an unexpected variable role");
        }
    }
    return RingMap(src, target, field, std::move(images));
}

// rename the torsor block into tensor copy `copy` (base coords fixed)
RingMap torsor_copy_map(const TorsorPresentation& T, const RegistryPtr& target, int copy) {
    const Field& field = T.field();
    const RegistryPtr& src = T.registry();
    std::vector<MultiPoly> images;
    for (std::size_t v = 0; v < src->size(); ++v) {
        const VarInfo& info = src->var(v);
        switch (info.role) {
            case VarRole::Uniformizer:
                images.push_back(MultiPoly::variable(target, field, target->uniformizer()));
                break;
            case VarRole::BaseCoord:
                images.push_back(MultiPoly::variable(target, field, target->index_of(src->name(v))));
                break;
            case VarRole::TorsorEntry:
                images.push_back(entry_var(target, field, VarRole::TorsorEntry, info.row, info.col, copy));
                break;
            case VarRole::DetInverseTorsor:
                images.push_back(
                    MultiPoly::variable(target, field, target->det_inverse(VarRole::DetInverseTorsor, copy)));
                break;
            default:
                throw Error("torsor ring contains an unexpected variable role");
        }
    }
    return RingMap(src, target, field, std::move(images));
}

// group relations transported into a combined ring (same variable names)
std::vector<MultiPoly> group_relations_in(const GroupPresentation& G, const RegistryPtr& target) {
    std::vector<MultiPoly> out;
    for (const MultiPoly& g : G.relations().generators()) out.push_back(transport(g, target));
    return out;
}

}  // namespace

RingMap coaction_map(const TorsorPresentation& T) {
    return coaction_like_map(T, coaction_registry(T), 0, 0);
}

MultiPoly coaction_image(const MultiPoly& f, const TorsorPresentation& T) {
    return coaction_map(T).apply(f);
}

CertificateEntry verify_comodule(const TorsorPresentation& T, const GroupPresentation& G,
                                 const GroebnerLimits& limits) {
    const Field& field = T.field();
    RegistryPtr cring = coaction_registry(T);
    RingMap rho = coaction_like_map(T, cring, 0, 0);

    std::vector<MultiPoly> gens = group_relations_in(G, cring);
    for (const MultiPoly& f : T.combined_relations().generators())
        gens.push_back(transport(f, cring));
    IdealPresentation J(cring, field, std::move(gens));

    std::string witness;
    for (const MultiPoly& f : T.combined_relations().generators()) {
        if (!ideal_membership(rho.apply(f), J, T.membership_level(), limits)) {
            witness = f.to_string();
            break;
        }
    }

    // coassociativity (Delta (x) id) rho = (id (x) rho) rho on generators
    if (witness.empty()) {
        RegistrySpec spec;
        const RegistryPtr& base = T.base().registry();
        spec.uniformizer = base->name(base->uniformizer());
        for (std::size_t v : base->indices_with_role(VarRole::BaseCoord))
            spec.base_coords.push_back(base->name(v));
        spec.blocks.push_back({VarRole::GroupEntry, T.dim(), 1});
        spec.blocks.push_back({VarRole::GroupEntry, T.dim(), 2});
        spec.blocks.push_back({VarRole::TorsorEntry, T.dim(), 0});
        RegistryPtr big = build_registry(spec);

        // path 1: rho into (group copy 2) (x) torsor, then Delta on that copy
        RingMap rho2 = coaction_like_map(T, big, 2, 0);
        // expand copy-2 group variables through Delta into copies (1,2)
        std::vector<MultiPoly> expand;
        for (std::size_t v = 0; v < big->size(); ++v) {
            const VarInfo& info = big->var(v);
            if (info.role == VarRole::GroupEntry && info.copy == 2) {
                MultiPoly acc = MultiPoly::zero(big, field);
                for (int r = 1; r <= T.dim(); ++r)
                    acc = acc + entry_var(big, field, VarRole::GroupEntry, info.row, r, 1) *
                                    entry_var(big, field, VarRole::GroupEntry, r, info.col, 2);
                expand.push_back(acc);
            } else if (info.role == VarRole::DetInverseGroup && info.copy == 2) {
                expand.push_back(
                    MultiPoly::variable(big, field, big->det_inverse(VarRole::DetInverseGroup, 1)) *
                    MultiPoly::variable(big, field, big->det_inverse(VarRole::DetInverseGroup, 2)));
            } else {
                expand.push_back(MultiPoly::variable(big, field, v));
            }
        }
        RingMap delta_side(big, big, field, std::move(expand));

        // path 2: rho landing in group copy 1, then rho again on the torsor block
        RingMap rho1 = coaction_like_map(T, big, 1, 0);
        std::vector<MultiPoly> inner;
        for (std::size_t v = 0; v < big->size(); ++v) {
            const VarInfo& info = big->var(v);
            if (info.role == VarRole::TorsorEntry && info.copy == 0) {
                MultiPoly acc = MultiPoly::zero(big, field);
                for (int r = 1; r <= T.dim(); ++r)
                    acc = acc + entry_var(big, field, VarRole::GroupEntry, info.row, r, 2) *
                                    entry_var(big, field, VarRole::TorsorEntry, r, info.col, 0);
                inner.push_back(acc);
            } else if (info.role == VarRole::DetInverseTorsor && info.copy == 0) {
                inner.push_back(
                    MultiPoly::variable(big, field, big->det_inverse(VarRole::DetInverseGroup, 2)) *
                    MultiPoly::variable(big, field, big->det_inverse(VarRole::DetInverseTorsor, 0)));
            } else {
                inner.push_back(MultiPoly::variable(big, field, v));
            }
        }
        RingMap rho_side(big, big, field, std::move(inner));

        for (std::size_t v = 0; v < T.registry()->size(); ++v) {
            const VarInfo& info = T.registry()->var(v);
            if (info.role != VarRole::TorsorEntry && info.role != VarRole::DetInverseTorsor) continue;
            MultiPoly g = MultiPoly::variable(T.registry(), field, v);
            if (delta_side.apply(rho2.apply(g)) != rho_side.apply(rho1.apply(g))) {
                witness = "coassociativity on " + T.registry()->name(v);
                break;
            }
        }
    }

    return {"comodule", T.level(), witness.empty() ? CheckStatus::Pass : CheckStatus::Fail, witness};
}

PsiPair build_psi(const TorsorPresentation& T, const GroupPresentation& G) {
    const Field& field = T.field();
    const RegistryPtr& base = T.base().registry();
    int d = T.dim();

    RegistrySpec src_spec;
    src_spec.uniformizer = base->name(base->uniformizer());
    for (std::size_t v : base->indices_with_role(VarRole::BaseCoord))
        src_spec.base_coords.push_back(base->name(v));
    src_spec.blocks.push_back({VarRole::TorsorEntry, d, 1});
    src_spec.blocks.push_back({VarRole::TorsorEntry, d, 2});
    RegistryPtr src = build_registry(src_spec);

    RegistryPtr tgt = coaction_registry(T);

    // Psi: left factor through the coaction pattern, right factor unchanged
    std::vector<MultiPoly> psi_images;
    for (std::size_t v = 0; v < src->size(); ++v) {
        const VarInfo& info = src->var(v);
        switch (info.role) {
            case VarRole::Uniformizer:
                psi_images.push_back(MultiPoly::variable(tgt, field, tgt->uniformizer()));
                break;
            case VarRole::BaseCoord:
                psi_images.push_back(MultiPoly::variable(tgt, field, tgt->index_of(src->name(v))));
                break;
            case VarRole::TorsorEntry:
                if (info.copy == 1) {
                    MultiPoly acc = MultiPoly::zero(tgt, field);
                    for (int r = 1; r <= d; ++r)
                        acc = acc + entry_var(tgt, field, VarRole::GroupEntry, info.row, r, 0) *
                                        entry_var(tgt, field, VarRole::TorsorEntry, r, info.col, 0);
                    psi_images.push_back(acc);
                } else {
                    psi_images.push_back(entry_var(tgt, field, VarRole::TorsorEntry, info.row, info.col, 0));
                }
                break;
            case VarRole::DetInverseTorsor:
                if (info.copy == 1)
                    psi_images.push_back(
                        MultiPoly::variable(tgt, field, tgt->det_inverse(VarRole::DetInverseGroup, 0)) *
                        MultiPoly::variable(tgt, field, tgt->det_inverse(VarRole::DetInverseTorsor, 0)));
                else
                    psi_images.push_back(
                        MultiPoly::variable(tgt, field, tgt->det_inverse(VarRole::DetInverseTorsor, 0)));
                break;
            default:
                throw Error("unexpected variable in tensor-square ring");
        }
    }
    RingMap psi(src, tgt, field, std::move(psi_images));

    // Psi^{-1}: x_ij -> sum_r y'_ir H(y''_rj) with H(y_rs) = Dy * adj(y)_{sr},
    // D -> Dy' * det(y''), right torsor factor unchanged
    MultiPoly dy2 = MultiPoly::variable(src, field, src->det_inverse(VarRole::DetInverseTorsor, 2));
    std::vector<MultiPoly> inv_images;
    for (std::size_t v = 0; v < tgt->size(); ++v) {
        const VarInfo& info = tgt->var(v);
        switch (info.role) {
            case VarRole::Uniformizer:
                inv_images.push_back(MultiPoly::variable(src, field, src->uniformizer()));
                break;
            case VarRole::BaseCoord:
                inv_images.push_back(MultiPoly::variable(src, field, src->index_of(tgt->name(v))));
                break;
            case VarRole::GroupEntry: {
                MultiPoly acc = MultiPoly::zero(src, field);
                for (int r = 1; r <= d; ++r) {
                    // H(y_{r,col}) = (col,r)-entry of [y'']^{-1}
                    MultiPoly h = dy2 * block_adjugate_entry(src, field, VarRole::TorsorEntry,
                                                             info.col, r, 2);
                    acc = acc + entry_var(src, field, VarRole::TorsorEntry, info.row, r, 1) * h;
                }
                inv_images.push_back(acc);
                break;
            }
            case VarRole::DetInverseGroup:
                inv_images.push_back(
                    MultiPoly::variable(src, field, src->det_inverse(VarRole::DetInverseTorsor, 1)) *
                    block_det(src, field, VarRole::TorsorEntry, 2));
                break;
            case VarRole::TorsorEntry:
                inv_images.push_back(entry_var(src, field, VarRole::TorsorEntry, info.row, info.col, 2));
                break;
            case VarRole::DetInverseTorsor:
                inv_images.push_back(dy2);
                break;
            default:
                throw Error("unexpected variable in coaction ring");
        }
    }
    RingMap psi_inv(tgt, src, field, std::move(inv_images));

    // relation ideals on both sides
    std::vector<MultiPoly> src_gens;
    for (const MultiPoly& u : T.base().relations().generators()) src_gens.push_back(transport(u, src));
    RingMap c1 = torsor_copy_map(T, src, 1);
    RingMap c2 = torsor_copy_map(T, src, 2);
    for (const MultiPoly& f : T.relations().generators()) {
        src_gens.push_back(c1.apply(f));
        src_gens.push_back(c2.apply(f));
    }
    IdealPresentation src_rels(src, field, std::move(src_gens));

    std::vector<MultiPoly> tgt_gens = group_relations_in(G, tgt);
    for (const MultiPoly& f : T.combined_relations().generators()) tgt_gens.push_back(transport(f, tgt));
    IdealPresentation tgt_rels(tgt, field, std::move(tgt_gens));

    return {std::move(psi), std::move(psi_inv), std::move(src_rels), std::move(tgt_rels)};
}

PsiPair build_psi(const TorsorPresentation& T) { return build_psi(T, fiber_group(T)); }

Certificate verify_torsor(const TorsorPresentation& T, const GroupPresentation& G,
                          const GroebnerLimits& limits) {
    Certificate cert;
    const Field& field = T.field();
    Level lvl = T.level();
    MembershipLevel mlvl = T.membership_level();

    // (1) comodule
    cert.entries.push_back(verify_comodule(T, G, limits));

    // (2) Psi and Psi^{-1} well-defined
    PsiPair psi = build_psi(T, G);
    {
        std::string witness;
        for (const MultiPoly& g : psi.source_relations.generators())
            if (!ideal_membership(psi.psi.apply(g), psi.target_relations, mlvl, limits)) {
                witness = "psi(" + g.to_string() + ")";
                break;
            }
        if (witness.empty())
            for (const MultiPoly& g : psi.target_relations.generators())
                if (!ideal_membership(psi.psi_inv.apply(g), psi.source_relations, mlvl, limits)) {
                    witness = "psi_inv(" + g.to_string() + ")";
                    break;
                }
        cert.add("psi-well-defined", lvl, witness.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                 witness);
    }

    // (3) mutual inverses on generators modulo relations
    {
        std::string witness;
        const RegistryPtr& src = psi.psi.source();
        for (std::size_t v = 0; v < src->size() && witness.empty(); ++v) {
            MultiPoly g = MultiPoly::variable(src, field, v);
            MultiPoly diff = psi.psi_inv.apply(psi.psi.apply(g)) - g;
            if (!ideal_membership(diff, psi.source_relations, mlvl, limits))
                witness = "psi_inv(psi(" + src->name(v) + "))";
        }
        const RegistryPtr& tgt = psi.psi.target();
        for (std::size_t v = 0; v < tgt->size() && witness.empty(); ++v) {
            MultiPoly g = MultiPoly::variable(tgt, field, v);
            MultiPoly diff = psi.psi.apply(psi.psi_inv.apply(g)) - g;
            if (!ideal_membership(diff, psi.target_relations, mlvl, limits))
                witness = "psi(psi_inv(" + tgt->name(v) + "))";
        }
        cert.add("psi-mutual-inverse", lvl, witness.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                 witness);
    }

    // (4) integral level: relations t-saturated
    IdealPresentation combined = T.combined_relations();
    if (lvl == Level::Integral) {
        IdealPresentation sat = saturate_by_t(combined, limits);
        bool ok = ideal_equal(sat, combined, MembershipLevel::Strict, limits);
        std::string witness;
        if (!ok)
            for (const MultiPoly& g : sat.generators())
                if (!ideal_membership(g, combined, MembershipLevel::Strict, limits)) {
                    witness = g.to_string();
                    break;
                }
        cert.add("saturated", lvl, ok ? CheckStatus::Pass : CheckStatus::Fail, witness);
    } else {
        cert.add("saturated", lvl, CheckStatus::Skipped);
    }

    // (5) integral level: special fiber is the product G_s x X_s
    if (lvl == Level::Integral) {
        const RegistryPtr& reg = T.registry();
        std::vector<MultiPoly> fiber_gens;
        for (const MultiPoly& g : combined.generators()) {
            MultiPoly r = g.reduce_mod_t();
            if (!r.is_zero()) fiber_gens.push_back(r);
        }
        IdealPresentation fiber(reg, field, std::move(fiber_gens));

        std::vector<MultiPoly> prod_gens;
        for (const MultiPoly& u : T.base().relations().generators()) {
            MultiPoly r = u.reduce_mod_t();
            if (!r.is_zero()) prod_gens.push_back(transport(r, reg));
        }
        // group special-fiber relations renamed into the torsor block
        {
            const RegistryPtr& greg = G.registry();
            std::vector<MultiPoly> images;
            for (std::size_t v = 0; v < greg->size(); ++v) {
                const VarInfo& info = greg->var(v);
                switch (info.role) {
                    case VarRole::Uniformizer:
                        images.push_back(MultiPoly::variable(reg, field, reg->uniformizer()));
                        break;
                    case VarRole::GroupEntry:
                        images.push_back(entry_var(reg, field, VarRole::TorsorEntry, info.row, info.col));
                        break;
                    case VarRole::DetInverseGroup:
                        images.push_back(
                            MultiPoly::variable(reg, field, reg->det_inverse(VarRole::DetInverseTorsor)));
                        break;
                    default:
                        throw Error("group ring contains an unexpected variable role");
                }
            }
            RingMap rename(greg, reg, field, std::move(images));
            for (const MultiPoly& g : G.relations().generators()) {
                MultiPoly r = rename.apply(g).reduce_mod_t();
                if (!r.is_zero()) prod_gens.push_back(r);
            }
        }
        IdealPresentation product(reg, field, std::move(prod_gens));

        bool ok = ideal_equal(fiber, product, MembershipLevel::Strict, limits);
        std::string note;
        if (!ok) {
            // the fiber may be the graph of a section; translating by it
            // trivializes the torsor ("up to a translation")
            MonomialOrder ord = MonomialOrder::grevlex(reg);
            int d = T.dim();
            std::vector<std::vector<MultiPoly>> s(static_cast<std::size_t>(d));
            bool have_section = true;
            for (int i = 1; i <= d && have_section; ++i) {
                for (int j = 1; j <= d && have_section; ++j) {
                    MultiPoly nf = normal_form(entry_var(reg, field, VarRole::TorsorEntry, i, j),
                                               fiber, ord, limits);
                    for (const Term& t : nf.terms())
                        for (std::size_t v = 0; v < reg->size(); ++v)
                            if (t.mon.exp(v) > 0 && reg->var(v).role != VarRole::BaseCoord)
                                have_section = false;
                    if (have_section) s[static_cast<std::size_t>(i - 1)].push_back(nf);
                }
            }
            if (have_section) {
                // determinant of the section must be a nonzero constant
                MultiPoly det = MultiPoly::zero(reg, field);
                if (d == 1) {
                    det = s[0][0];
                } else if (d == 2) {
                    det = s[0][0] * s[1][1] - s[0][1] * s[1][0];
                } else {
                    have_section = false;  // larger blocks: no translation attempt
                }
                if (have_section && det.n_terms() == 1 && det.terms()[0].mon.is_unit()) {
                    Scalar dets = det.terms()[0].coeff;
                    std::vector<MultiPoly> images;
                    for (std::size_t v = 0; v < reg->size(); ++v) {
                        const VarInfo& info = reg->var(v);
                        if (info.role == VarRole::TorsorEntry) {
                            MultiPoly acc = MultiPoly::zero(reg, field);
                            for (int r = 1; r <= d; ++r)
                                acc = acc + entry_var(reg, field, VarRole::TorsorEntry, info.row, r) *
                                                s[static_cast<std::size_t>(r - 1)]
                                                 [static_cast<std::size_t>(info.col - 1)];
                            images.push_back(acc);
                        } else if (info.role == VarRole::DetInverseTorsor) {
                            images.push_back(MultiPoly::variable(reg, field, v) * dets.inverse());
                        } else {
                            images.push_back(MultiPoly::variable(reg, field, v));
                        }
                    }
                    RingMap translate(reg, reg, field, std::move(images));
                    std::vector<MultiPoly> moved;
                    for (const MultiPoly& g : fiber.generators()) moved.push_back(translate.apply(g));
                    IdealPresentation translated(reg, field, std::move(moved));
                    ok = ideal_equal(translated, product, MembershipLevel::Strict, limits);
                    if (ok) note = "after translation by the fiber section";
                }
            }
        }
        std::string witness;
        if (!ok) witness = "special fiber is not the product of the group and base fibers";
        cert.add("product-special-fiber", lvl, ok ? CheckStatus::Pass : CheckStatus::Fail,
                 ok ? note : witness);
    } else {
        cert.add("product-special-fiber", lvl, CheckStatus::Skipped);
    }

    bool generic_ok = cert.passed("comodule") && cert.passed("psi-well-defined") &&
                      cert.passed("psi-mutual-inverse");
    if (lvl == Level::Generic) {
        cert.label = generic_ok ? "generic torsor" : "not certified";
    } else if (generic_ok && cert.passed("saturated")) {
        cert.label = cert.passed("product-special-fiber")
                         ? "torsor (product special fiber)"
                         : "generic torsor with R-flat model candidate";
    } else {
        cert.label = "not certified";
    }
    return cert;
}

}  // namespace torext
