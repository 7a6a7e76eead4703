#include "torext/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace torext {

namespace {

// Internal representation: term list sorted descending under the active order.
using Terms = std::vector<Term>;

Terms to_sorted(const MultiPoly& f, const MonomialOrder& ord) {
    Terms t = f.terms();
    std::sort(t.begin(), t.end(),
              [&ord](const Term& a, const Term& b) { return ord.compare(a.mon, b.mon) > 0; });
    return t;
}

MultiPoly from_terms(Terms t, const RegistryPtr& reg, const Field& field) {
    return MultiPoly(reg, field, std::move(t));
}

// a - c * mon * b, both sorted; result sorted
Terms subtract_multiple(const Terms& a, const Scalar& c, const Monomial& mon, const Terms& b,
                        const MonomialOrder& ord) {
    Terms out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Monomial bm = b[j].mon * mon;
        if (i >= a.size()) {
            out.push_back({bm, -(c * b[j].coeff)});
            ++j;
            continue;
        }
        int cmp = ord.compare(a[i].mon, bm);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back({bm, -(c * b[j].coeff)});
            ++j;
        } else {
            Scalar s = a[i].coeff - c * b[j].coeff;
            if (!s.is_zero()) out.push_back({a[i].mon, s});
            ++i;
            ++j;
        }
    }
    return out;
}

void check_degree(const Terms& f, const GroebnerLimits& limits) {
    for (const Term& t : f)
        if (t.mon.total_degree() > limits.max_degree)
            throw ResourceLimit("polynomial degree exceeds cap " + std::to_string(limits.max_degree));
}

// Full multivariate division: remainder of f by the (sorted) family basis.
Terms reduce_full(Terms f, const std::vector<Terms>& basis, const MonomialOrder& ord,
                  const GroebnerLimits& limits) {
    Terms rem;
    while (!f.empty()) {
        const Term& lt = f.front();
        bool reduced = false;
        for (const Terms& g : basis) {
            if (g.empty()) continue;
            if (g.front().mon.divides(lt.mon)) {
                Scalar c = lt.coeff / g.front().coeff;
                Monomial q = lt.mon.divide(g.front().mon);
                f = subtract_multiple(f, c, q, g, ord);
                check_degree(f, limits);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.push_back(f.front());
            f.erase(f.begin());
        }
    }
    return rem;
}

Terms make_monic(Terms f) {
    if (f.empty() || f.front().coeff.is_one()) return f;
    Scalar inv = f.front().coeff.inverse();
    for (Term& t : f) t.coeff = t.coeff * inv;
    return f;
}

struct PairKey {
    std::size_t i, j;
    bool operator<(const PairKey& o) const { return i < o.i || (i == o.i && j < o.j); }
    bool operator==(const PairKey& o) const = default;
};

std::vector<Terms> buchberger(std::vector<Terms> basis, const MonomialOrder& ord,
                              const GroebnerLimits& limits) {
    std::vector<PairKey> pending;
    std::set<PairKey> done;
    auto add_pairs_for = [&](std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) pending.push_back({i, n});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    while (!pending.empty()) {
        // deterministic selection: smallest lcm under the order, then indices
        std::size_t best = 0;
        Monomial best_lcm = Monomial::lcm(basis[pending[0].i].front().mon, basis[pending[0].j].front().mon);
        for (std::size_t k = 1; k < pending.size(); ++k) {
            Monomial l = Monomial::lcm(basis[pending[k].i].front().mon, basis[pending[k].j].front().mon);
            int cmp = ord.compare(l, best_lcm);
            if (cmp < 0 || (cmp == 0 && pending[k] < pending[best])) {
                best = k;
                best_lcm = l;
            }
        }
        PairKey pk = pending[best];
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        done.insert(pk);

        const Monomial& lmi = basis[pk.i].front().mon;
        const Monomial& lmj = basis[pk.j].front().mon;
        if (Monomial::coprime(lmi, lmj)) continue;  // Buchberger's first criterion
        Monomial l = Monomial::lcm(lmi, lmj);
        // chain criterion: some other lead divides the lcm and both side pairs
        // were already treated
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!basis[k].front().mon.divides(l)) continue;
            PairKey a{std::min(pk.i, k), std::max(pk.i, k)};
            PairKey b{std::min(pk.j, k), std::max(pk.j, k)};
            if (done.count(a) && done.count(b)) skip = true;
        }
        if (skip) continue;

        // S-polynomial
        Scalar ci = basis[pk.i].front().coeff;
        Terms s = subtract_multiple({}, -ci.inverse(), l.divide(lmi), basis[pk.i], ord);
        Scalar cj = basis[pk.j].front().coeff;
        s = subtract_multiple(s, cj.inverse(), l.divide(lmj), basis[pk.j], ord);
        check_degree(s, limits);
        Terms h = reduce_full(std::move(s), basis, ord, limits);
        if (h.empty()) continue;
        basis.push_back(make_monic(std::move(h)));
        if (basis.size() > limits.max_basis)
            throw ResourceLimit("basis size exceeds cap " + std::to_string(limits.max_basis));
        add_pairs_for(basis.size() - 1);
    }
    return basis;
}

std::vector<Terms> reduce_basis(std::vector<Terms> basis, const MonomialOrder& ord,
                                const GroebnerLimits& limits) {
    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Terms> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (basis[j].front().mon.divides(basis[i].front().mon)) {
                if (basis[i].front().mon == basis[j].front().mon)
                    redundant = j < i;  // keep one representative per lead
                else
                    redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // tail-reduce until stable
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Terms> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Terms r = reduce_full(minimal[i], others, ord, limits);
            r = make_monic(std::move(r));
            if (r != minimal[i]) {
                minimal[i] = std::move(r);
                changed = true;
            }
        }
        // a tail reduction can in principle empty an element; drop those
        std::erase_if(minimal, [](const Terms& t) { return t.empty(); });
    }
    std::sort(minimal.begin(), minimal.end(), [&ord](const Terms& a, const Terms& b) {
        return ord.compare(a.front().mon, b.front().mon) > 0;
    });
    return minimal;
}

std::vector<Terms> basis_terms(const std::vector<MultiPoly>& basis, const MonomialOrder& ord) {
    std::vector<Terms> out;
    out.reserve(basis.size());
    for (const MultiPoly& g : basis) out.push_back(to_sorted(g, ord));
    return out;
}

}  // namespace

std::vector<MultiPoly> groebner_basis(const IdealPresentation& I, const MonomialOrder& ord,
                                      const GroebnerLimits& limits) {
    if (const auto* cached = I.cached_basis(ord)) return *cached;
    std::vector<Terms> basis;
    for (const MultiPoly& g : I.generators()) basis.push_back(make_monic(to_sorted(g, ord)));
    if (!basis.empty()) {
        basis = buchberger(std::move(basis), ord, limits);
        basis = reduce_basis(std::move(basis), ord, limits);
    }
    std::vector<MultiPoly> out;
    out.reserve(basis.size());
    for (Terms& t : basis) out.push_back(from_terms(std::move(t), I.registry(), I.field()));
    I.cache_basis(ord, out);
    return out;
}

MultiPoly normal_form(const MultiPoly& f, const IdealPresentation& I, const MonomialOrder& ord,
                      const GroebnerLimits& limits) {
    if (!same_registry(f.registry(), I.registry()))
        throw RegistryMismatch("polynomial is not in the ideal's ring");
    std::vector<MultiPoly> gb = groebner_basis(I, ord, limits);
    Terms r = reduce_full(to_sorted(f, ord), basis_terms(gb, ord), ord, limits);
    return from_terms(std::move(r), I.registry(), I.field());
}

namespace {

std::shared_ptr<const IdealPresentation> saturation_of(const IdealPresentation& I,
                                                       const GroebnerLimits& limits) {
    if (auto cached = I.cached_saturation()) return cached;
    const RegistryPtr& reg = I.registry();
    // extended ring with the Rabinowitsch variable w, eliminated first
    std::vector<VarInfo> vars;
    std::string wname = reg->fresh_name("w_sat");
    vars.push_back({wname, VarRole::Auxiliary, 0, 0, 0});
    for (std::size_t v = 0; v < reg->size(); ++v) vars.push_back(reg->var(v));
    auto ext = std::make_shared<VariableRegistry>(std::move(vars));
    RegistryPtr extp = ext;

    std::vector<MultiPoly> gens;
    for (const MultiPoly& g : I.generators()) gens.push_back(transport(g, extp));
    MultiPoly w = MultiPoly::variable(extp, I.field(), extp->index_of(wname));
    MultiPoly pi = MultiPoly::variable(extp, I.field(), extp->uniformizer());
    MultiPoly one = MultiPoly::constant(extp, Scalar::one(I.field()));
    gens.push_back(one - w * pi);

    IdealPresentation J(extp, I.field(), std::move(gens));
    MonomialOrder ord = MonomialOrder::block(extp, {extp->index_of(wname)});
    std::vector<MultiPoly> gb = groebner_basis(J, ord, limits);
    std::vector<MultiPoly> kept;
    std::size_t wi = extp->index_of(wname);
    for (const MultiPoly& g : gb) {
        bool touches_w = false;
        for (const Term& t : g.terms())
            if (t.mon.exp(wi) > 0) touches_w = true;
        if (!touches_w) kept.push_back(transport(g, reg));
    }
    auto sat = std::make_shared<IdealPresentation>(reg, I.field(), std::move(kept));
    sat->cache_saturation(sat);  // saturation is idempotent by construction
    I.cache_saturation(sat);
    return sat;
}

}  // namespace

bool ideal_membership(const MultiPoly& f, const IdealPresentation& I, MembershipLevel level,
                      const GroebnerLimits& limits) {
    if (level == MembershipLevel::Strict)
        return normal_form(f, I, MonomialOrder::grevlex(I.registry()), limits).is_zero();
    auto sat = saturation_of(I, limits);
    return normal_form(f, *sat, MonomialOrder::grevlex(I.registry()), limits).is_zero();
}

IdealPresentation saturate_by_t(const IdealPresentation& I, const GroebnerLimits& limits) {
    return *saturation_of(I, limits);
}

IdealPresentation eliminate(const IdealPresentation& I, const std::vector<std::size_t>& vars,
                            const GroebnerLimits& limits) {
    MonomialOrder ord = MonomialOrder::block(I.registry(), vars);
    std::vector<MultiPoly> gb = groebner_basis(I, ord, limits);
    std::vector<MultiPoly> kept;
    for (const MultiPoly& g : gb) {
        bool touches = false;
        for (const Term& t : g.terms())
            for (std::size_t v : vars)
                if (t.mon.exp(v) > 0) touches = true;
        if (!touches) kept.push_back(g);
    }
    return IdealPresentation(I.registry(), I.field(), std::move(kept));
}

bool ideal_equal(const IdealPresentation& I, const IdealPresentation& J, MembershipLevel level,
                 const GroebnerLimits& limits) {
    if (!same_registry(I.registry(), J.registry()))
        throw RegistryMismatch("ideal comparison across different rings");
    for (const MultiPoly& g : I.generators())
        if (!ideal_membership(g, J, level, limits)) return false;
    for (const MultiPoly& g : J.generators())
        if (!ideal_membership(g, I, level, limits)) return false;
    return true;
}

IdealPresentation ring_map_kernel(const RingMap& m, const IdealPresentation& I_target,
                                  const GroebnerLimits& limits) {
    if (!same_registry(m.target(), I_target.registry()))
        throw RegistryMismatch("target ideal lives outside the map's target ring");
    const RegistryPtr& src = m.source();
    const RegistryPtr& tgt = m.target();
    const Field& field = m.field();

    // combined ring: renamed copies of the target variables first (to be
    // eliminated), then the source variables
    std::vector<VarInfo> vars;
    std::vector<std::string> tgt_names(tgt->size());
    std::set<std::string> used;
    for (std::size_t v = 0; v < src->size(); ++v) used.insert(src->name(v));
    for (std::size_t v = 0; v < tgt->size(); ++v) {
        std::string name = tgt->name(v) + "_tgt";
        while (used.count(name)) name += "_";
        used.insert(name);
        tgt_names[v] = name;
        vars.push_back({name, VarRole::Auxiliary, 0, 0, 0});
    }
    // the combined ring keeps the source uniformizer; renamed target vars are
    // all auxiliary
    for (std::size_t v = 0; v < src->size(); ++v) vars.push_back(src->var(v));
    RegistryPtr comb = std::make_shared<VariableRegistry>(std::move(vars));

    auto rename_target = [&](const MultiPoly& f) {
        std::vector<Term> terms;
        for (const Term& t : f.terms()) {
            Monomial mm(comb->size());
            for (std::size_t v = 0; v < tgt->size(); ++v)
                if (t.mon.exp(v) > 0) mm.set_exp(comb->index_of(tgt_names[v]), t.mon.exp(v));
            terms.push_back({mm, t.coeff});
        }
        return MultiPoly(comb, field, std::move(terms));
    };

    std::vector<MultiPoly> gens;
    for (const MultiPoly& g : I_target.generators()) gens.push_back(rename_target(g));
    for (std::size_t v = 0; v < src->size(); ++v) {
        MultiPoly lhs = MultiPoly::variable(comb, field, comb->index_of(src->name(v)));
        gens.push_back(lhs - rename_target(m.image(v)));
    }

    IdealPresentation graph(comb, field, std::move(gens));
    std::vector<std::size_t> elim;
    for (const std::string& n : tgt_names) elim.push_back(comb->index_of(n));
    IdealPresentation cut = eliminate(graph, elim, limits);

    std::vector<MultiPoly> out;
    for (const MultiPoly& g : cut.generators()) out.push_back(transport(g, src));
    return IdealPresentation(src, field, std::move(out));
}

}  // namespace torext
