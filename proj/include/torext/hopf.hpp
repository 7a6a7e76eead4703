#ifndef TOREXT_HOPF_HPP
#define TOREXT_HOPF_HPP

#include <optional>
#include <string>
#include <vector>

#include "torext/certificate.hpp"
#include "torext/groebner.hpp"

namespace torext {

// Declarative description of a combined ring; variables are declared in the
// order pi, base coords, matrix blocks (entries row-major, then the block's
// det-inverse), auxiliaries.
struct RegistrySpec {
    struct MatrixBlock {
        VarRole entry_role;  // GroupEntry or TorsorEntry
        int d = 0;
        int copy = 0;
    };
    std::string uniformizer = "pi";
    std::vector<std::string> base_coords;
    std::vector<MatrixBlock> blocks;
    std::vector<std::string> auxiliaries;
};

RegistryPtr build_registry(const RegistrySpec& spec);

// Symbolic determinant of the (role, copy) entry block.
MultiPoly block_det(const RegistryPtr& reg, const Field& field, VarRole role, int copy = 0);
// Adjugate entry adj(x)_{ij} (transposed cofactor), exact integer coefficients.
MultiPoly block_adjugate_entry(const RegistryPtr& reg, const Field& field, VarRole role, int i,
                               int j, int copy = 0);
// D * det[entries] - 1 for the block and its det-inverse variable.
MultiPoly det_relation(const RegistryPtr& reg, const Field& field, VarRole entry_role, int copy = 0);

// A closed subgroup scheme of GL_d: relation ideal (containing the
// determinant relation) in the ring k[pi, x_11..x_dd, D].
class GroupPresentation {
  public:
    GroupPresentation(int d, RegistryPtr reg, IdealPresentation relations, Level level);

    int dim() const { return d_; }
    const RegistryPtr& registry() const { return reg_; }
    const IdealPresentation& relations() const { return rels_; }
    const Field& field() const { return rels_.field(); }
    Level level() const { return level_; }
    MembershipLevel membership_level() const {
        return level_ == Level::Generic ? MembershipLevel::Generic : MembershipLevel::Strict;
    }

  private:
    int d_;
    RegistryPtr reg_;
    IdealPresentation rels_;
    Level level_;
};

// Standard group ring k[pi, x_11..x_dd, D].
RegistryPtr make_group_registry(int d);

// Tensor squares/cubes as concrete rings with prime / double-prime copies.
RegistryPtr doubled_group_registry(const GroupPresentation& G);
RegistryPtr tripled_group_registry(const GroupPresentation& G);

// Delta: x_ij -> sum_r x'_ir x''_rj, D -> D' D''.
RingMap comultiplication_map(const GroupPresentation& G);
// S: x_ij -> D * adj(x)_ij, D -> det(x); an endomorphism of the group ring.
RingMap antipode_map(const GroupPresentation& G);
// I (x) A + A (x) I inside the doubled ring.
IdealPresentation doubled_relations(const GroupPresentation& G);

MultiPoly comultiplication_image(const MultiPoly& f, const GroupPresentation& G);
// Substitution x_ij -> delta_ij, D -> 1; the counit lands in R = k[pi].
MultiPoly counit_image(const MultiPoly& f, const GroupPresentation& G);
MultiPoly antipode_image(const MultiPoly& f, const GroupPresentation& G);

// Checks: Hopf ideal, counit kills I, antipode preserves I, coassociativity
// and counit laws on generators, antipode law modulo the determinant relation.
Certificate verify_hopf(const GroupPresentation& G, const GroebnerLimits& limits = {});
// Same checks, throwing NotAHopfIdeal on the first failure.
void require_hopf(const GroupPresentation& G, const GroebnerLimits& limits = {});

// Closure of a generic group in GL_{d,R}: t-saturated relations.
GroupPresentation flat_closure(const GroupPresentation& G, const GroebnerLimits& limits = {});
// Relations reduced mod t; the presentation over the residue field.
GroupPresentation special_fiber_group(const GroupPresentation& G);

// Diagnostic only: number of standard monomials of the saturated relation
// ideal with pi stripped from the leading terms; nullopt when not visibly
// finite.
std::optional<long> group_order_diagnostic(const GroupPresentation& G,
                                           const GroebnerLimits& limits = {});

// Built-in actors: "GL1", "GL2", "mu_p", "alpha_p", "Z/p", "M_p" (also
// accepts explicit forms like "mu_3", "Z/5", "M_2" matching the field).
GroupPresentation builtin_group(const std::string& name, const Field& field);
std::vector<std::string> builtin_group_names();

}  // namespace torext

#endif
