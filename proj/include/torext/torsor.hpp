#ifndef TOREXT_TORSOR_HPP
#define TOREXT_TORSOR_HPP

#include "torext/hopf.hpp"

namespace torext {

// Affine base X = Spec k[pi][t_1..t_r]/(u_1..u_m) with the origin as the
// distinguished point.
class BasePresentation {
  public:
    BasePresentation(RegistryPtr reg, IdealPresentation relations, Level level);

    const RegistryPtr& registry() const { return reg_; }
    const IdealPresentation& relations() const { return rels_; }
    const Field& field() const { return rels_.field(); }
    Level level() const { return level_; }
    std::vector<std::size_t> coords() const { return reg_->indices_with_role(VarRole::BaseCoord); }
    bool is_free() const { return rels_.is_zero_ideal(); }  // affine space

  private:
    RegistryPtr reg_;
    IdealPresentation rels_;
    Level level_;
};

// Pointed torsor presentation inside the trivial GL_d-torsor over the base:
// relations f_1..f_s (plus the determinant relation) in the total ring
// k[pi, t.., y_11..y_dd, Dy]; the distinguished point is (origin, identity).
class TorsorPresentation {
  public:
    TorsorPresentation(BasePresentation base, int d, RegistryPtr reg, IdealPresentation relations,
                       Level level);

    const BasePresentation& base() const { return base_; }
    int dim() const { return d_; }
    const RegistryPtr& registry() const { return reg_; }
    const IdealPresentation& relations() const { return rels_; }
    const Field& field() const { return rels_.field(); }
    Level level() const { return level_; }
    MembershipLevel membership_level() const {
        return level_ == Level::Generic ? MembershipLevel::Generic : MembershipLevel::Strict;
    }

    // base relations transported into the total ring
    std::vector<MultiPoly> base_relations_in_total() const;
    // base relations + torsor relations
    IdealPresentation combined_relations() const;

  private:
    BasePresentation base_;
    int d_;
    RegistryPtr reg_;
    IdealPresentation rels_;
    Level level_;
};

RegistryPtr make_base_registry(const std::vector<std::string>& coords,
                               const std::string& uniformizer = "pi");
RegistryPtr make_torsor_registry(const RegistryPtr& base_reg, int d);

// Affine base A^r with coordinates t_1..t_r (no relations).
BasePresentation affine_base(int r, const Field& field, const std::string& uniformizer = "pi");

// Group of the fiber over the distinguished point: specialize base coords to
// zero and rename y -> x, Dy -> D. Throws EmptyFiber if the identity matrix
// does not lie on the fiber.
GroupPresentation fiber_group(const TorsorPresentation& T);

// The ring C (x) B housing the coaction, and rho itself:
// y_ij -> sum_r x_ir (x) y_rj, Dy -> D * Dy, base coords fixed.
RegistryPtr coaction_registry(const TorsorPresentation& T);
RingMap coaction_map(const TorsorPresentation& T);
MultiPoly coaction_image(const MultiPoly& f, const TorsorPresentation& T);

// rho(I_B) inside I_C (x) B + C (x) I_B plus coassociativity on generators.
CertificateEntry verify_comodule(const TorsorPresentation& T, const GroupPresentation& G,
                                 const GroebnerLimits& limits = {});

// The isomorphism Psi: B (x)_A B -> C (x) B and its inverse, between concrete
// tensor rings (left torsor copy "_p", right copy "_pp" on the source side).
struct PsiPair {
    RingMap psi;
    RingMap psi_inv;
    IdealPresentation source_relations;  // relations of B (x)_A B
    IdealPresentation target_relations;  // relations of C (x) B
};
PsiPair build_psi(const TorsorPresentation& T, const GroupPresentation& G);
PsiPair build_psi(const TorsorPresentation& T);  // against fiber_group(T)

// Certificate checks, in order: (1) comodule, (2) psi well-defined,
// (3) psi mutual inverses on generators, and for integral presentations
// (4) t-saturated relations, (5) product special fiber (with translation by a
// graph section when the fiber is the graph of one). Failures are recorded,
// never thrown.
Certificate verify_torsor(const TorsorPresentation& T, const GroupPresentation& G,
                          const GroebnerLimits& limits = {});

}  // namespace torext

#endif
