#include "torext/families.hpp"

#include "torext/neron.hpp"

namespace torext {

namespace {

void require_char_p(const Field& field, std::int64_t p, const std::string& what) {
    if (field.characteristic() != p)
        throw CharacteristicMismatch(what + " requires characteristic " + std::to_string(p));
}

MultiPoly origin_value(const MultiPoly& f) {
    const RegistryPtr& reg = f.registry();
    std::vector<std::pair<std::size_t, Scalar>> zeros;
    for (std::size_t v = 0; v < reg->size(); ++v)
        if (reg->var(v).role == VarRole::BaseCoord) zeros.push_back({v, Scalar::zero(f.field())});
    return f.substitute_scalars(zeros);
}

MultiPoly entry_var(const RegistryPtr& reg, const Field& field, int i, int j) {
    return MultiPoly::variable(reg, field, reg->entry(VarRole::TorsorEntry, i, j));
}

std::vector<MultiPoly> unipotent_torsor_pins(const RegistryPtr& reg, const Field& field) {
    MultiPoly one = MultiPoly::constant(reg, Scalar::one(field));
    return {entry_var(reg, field, 1, 1) - one, entry_var(reg, field, 2, 2) - one,
            entry_var(reg, field, 2, 1)};
}

}  // namespace

TorsorPresentation artin_schreier(std::int64_t p, const BasePresentation& base,
                                  const MultiPoly& rhs) {
    const Field& field = base.field();
    require_char_p(field, p, "artin_schreier");
    if (!same_registry(rhs.registry(), base.registry()))
        throw RegistryMismatch("rhs must live in the base ring");
    if (!rhs.is_zero() && !origin_value(rhs).is_zero())
        throw NotPointed("artin_schreier rhs does not vanish at the origin");

    RegistryPtr reg = make_torsor_registry(base.registry(), 2);
    std::vector<MultiPoly> gens = unipotent_torsor_pins(reg, field);
    MultiPoly y = entry_var(reg, field, 1, 2);
    gens.push_back(y.pow(static_cast<std::uint64_t>(p)) - y - transport(rhs, reg));
    gens.push_back(det_relation(reg, field, VarRole::TorsorEntry));
    return TorsorPresentation(base, 2, reg, IdealPresentation(reg, field, std::move(gens)),
                              Level::Generic);
}

TorsorPresentation kummer(std::int64_t p, const BasePresentation& base, const MultiPoly& unit_rhs) {
    const Field& field = base.field();
    if (!same_registry(unit_rhs.registry(), base.registry()))
        throw RegistryMismatch("unit_rhs must live in the base ring");
    MultiPoly at0 = origin_value(unit_rhs);
    if (!(at0 == MultiPoly::constant(base.registry(), Scalar::one(field))))
        throw NotPointed("kummer unit_rhs is not 1 at the origin");

    RegistryPtr reg = make_torsor_registry(base.registry(), 1);
    MultiPoly y = entry_var(reg, field, 1, 1);
    std::vector<MultiPoly> gens;
    gens.push_back(y.pow(static_cast<std::uint64_t>(p)) - transport(unit_rhs, reg));
    gens.push_back(det_relation(reg, field, VarRole::TorsorEntry));
    return TorsorPresentation(base, 1, reg, IdealPresentation(reg, field, std::move(gens)),
                              Level::Generic);
}

TorsorPresentation m_torsor(std::int64_t p, const BasePresentation& base, const MultiPoly& a) {
    const Field& field = base.field();
    require_char_p(field, p, "m_torsor");
    if (!same_registry(a.registry(), base.registry()))
        throw RegistryMismatch("a must live in the base ring");
    if (!a.is_zero() && !origin_value(a).is_zero())
        throw NotPointed("m_torsor parameter does not vanish at the origin");

    RegistryPtr reg = make_torsor_registry(base.registry(), 2);
    std::vector<MultiPoly> gens = unipotent_torsor_pins(reg, field);
    MultiPoly y = entry_var(reg, field, 1, 2);
    MultiPoly pi = MultiPoly::variable(reg, field, reg->uniformizer());
    gens.push_back(pi.pow(static_cast<std::uint64_t>(p - 1)) * y.pow(static_cast<std::uint64_t>(p)) -
                   y + transport(a, reg));
    gens.push_back(det_relation(reg, field, VarRole::TorsorEntry));
    return TorsorPresentation(base, 2, reg, IdealPresentation(reg, field, std::move(gens)),
                              Level::Integral);
}

TorsorPresentation m_blow_down(const TorsorPresentation& T, std::int64_t p) {
    const Field& field = T.field();
    require_char_p(field, p, "m_blow_down");
    if (T.dim() != 2) throw Error("m_blow_down expects the unipotent GL_2 presentation");
    const RegistryPtr& reg = T.registry();
    std::size_t free_entry = reg->entry(VarRole::TorsorEntry, 1, 2);
    MultiPoly detrel = det_relation(reg, field, VarRole::TorsorEntry);
    std::vector<MultiPoly> gens;
    for (const MultiPoly& f : T.relations().generators()) {
        bool touches = false;
        for (const Term& t : f.terms())
            if (t.mon.exp(free_entry) > 0) touches = true;
        gens.push_back(touches && !(f == detrel) ? rescale_entry_down(f, free_entry) : f);
    }
    return TorsorPresentation(T.base(), 2, reg, IdealPresentation(reg, field, std::move(gens)),
                              Level::Integral);
}

BasePresentation alpha_p_base(std::int64_t p, const Field& field, const std::string& uniformizer) {
    RegistryPtr reg = make_base_registry({"t_1"}, uniformizer);
    MultiPoly t = MultiPoly::variable(reg, field, reg->index_of("t_1"));
    return BasePresentation(reg, IdealPresentation(reg, field, {t.pow(static_cast<std::uint64_t>(p))}),
                            Level::Integral);
}

}  // namespace torext
