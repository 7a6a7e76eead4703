#ifndef TOREXT_FAMILIES_HPP
#define TOREXT_FAMILIES_HPP

#include "torext/torsor.hpp"

namespace torext {

// Artin-Schreier torsor y^p - y = rhs under Z/pZ, embedded unipotently in
// GL_2 (the free entry is y_12). rhs lives in the base ring and must vanish
// at the origin.
TorsorPresentation artin_schreier(std::int64_t p, const BasePresentation& base,
                                  const MultiPoly& rhs);

// Kummer torsor y^p = unit_rhs under mu_p in GL_1; unit_rhs(origin) = 1.
TorsorPresentation kummer(std::int64_t p, const BasePresentation& base, const MultiPoly& unit_rhs);

// M-torsor pi^(p-1) y^p - y + a in the same unipotent coordinates; integral
// presentation with fiber group M. a(origin) = 0.
TorsorPresentation m_torsor(std::int64_t p, const BasePresentation& base, const MultiPoly& a);

// Contracted product of an M-torsor with (Z/pZ)_R: the blow-down rescaling
// turning pi^(p-1) y^p - y + a into y^p - y + pi*a.
TorsorPresentation m_blow_down(const TorsorPresentation& T, std::int64_t p);

// Base preset alpha_p: one coordinate with relation t_1^p.
BasePresentation alpha_p_base(std::int64_t p, const Field& field,
                              const std::string& uniformizer = "pi");

}  // namespace torext

#endif
