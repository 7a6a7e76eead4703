#ifndef TOREXT_REGISTRY_HPP
#define TOREXT_REGISTRY_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "torext/errors.hpp"

namespace torext {

// Role of a variable in the ambient ring R[t_1..t_r, y_11..y_dd, 1/det, ...].
enum class VarRole {
    Uniformizer,       // pi; exactly one per registry
    BaseCoord,         // t_1..t_r
    GroupEntry,        // x_ij, matrix entry of the group block
    TorsorEntry,       // y_ij, matrix entry of the torsor block
    DetInverseGroup,   // adjoined inverse of det[x_ij]
    DetInverseTorsor,  // adjoined inverse of det[y_ij]
    Auxiliary          // saturation/elimination helpers, plain scheme variables
};

struct VarInfo {
    std::string name;
    VarRole role = VarRole::Auxiliary;
    int row = 0;   // 1-based for matrix entries, 0 otherwise
    int col = 0;
    int copy = 0;  // tensor-factor index: 0 plain, 1 prime, 2 double-prime, 3 triple-prime

    bool operator==(const VarInfo&) const = default;
};

// Ordered list of variables with roles. Immutable once built; shared by
// polynomials via shared_ptr. The default monomial order is grevlex with the
// precedence auxiliary > torsor entries > det inverses > group entries >
// base coords > uniformizer (uniformizer last), ties broken by tensor copy
// and then declaration order.
class VariableRegistry {
  public:
    explicit VariableRegistry(std::vector<VarInfo> vars);

    std::size_t size() const { return vars_.size(); }
    const VarInfo& var(std::size_t i) const { return vars_[i]; }
    const std::string& name(std::size_t i) const { return vars_[i].name; }

    bool has(const std::string& name) const { return index_.count(name) > 0; }
    std::size_t index_of(const std::string& name) const;

    // Index of the unique uniformizer variable.
    std::size_t uniformizer() const { return uniformizer_; }

    // Variable indices sorted most-significant-first for the default order.
    const std::vector<std::size_t>& precedence() const { return precedence_; }

    std::vector<std::size_t> indices_with_role(VarRole role, int copy = 0) const;
    // Matrix entry lookup within a (role, copy) block; 1-based row/col.
    std::size_t entry(VarRole role, int row, int col, int copy = 0) const;
    // Unique det-inverse of the given role/copy.
    std::size_t det_inverse(VarRole role, int copy = 0) const;

    // Matrix size of the (complete) entry block for the role, 0 if absent.
    int block_dim(VarRole role, int copy = 0) const;

    bool same_as(const VariableRegistry& other) const { return vars_ == other.vars_; }

    std::string fresh_name(const std::string& stem) const;

  private:
    std::vector<VarInfo> vars_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::size_t> precedence_;
    std::size_t uniformizer_ = 0;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

inline bool same_registry(const RegistryPtr& a, const RegistryPtr& b) {
    return a == b || (a && b && a->same_as(*b));
}

inline void require_same_registry(const RegistryPtr& a, const RegistryPtr& b) {
    if (!same_registry(a, b)) throw RegistryMismatch();
}

// Conventional entry names: x_11 / y_23 (single digits) or x_10_11 for larger
// matrices, with tensor-copy suffixes "_p", "_pp", "_ppp".
std::string entry_name(VarRole role, int row, int col, int copy = 0);
std::string det_inverse_name(VarRole role, int copy = 0);
std::string copy_suffix(int copy);

}  // namespace torext

#endif
