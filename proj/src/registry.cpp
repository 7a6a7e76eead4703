#include "torext/registry.hpp"

#include <algorithm>
#include <cctype>

namespace torext {

namespace {

int role_rank(VarRole r) {
    switch (r) {
        case VarRole::Auxiliary: return 0;
        case VarRole::TorsorEntry: return 1;
        case VarRole::DetInverseTorsor: return 2;
        case VarRole::DetInverseGroup: return 2;
        case VarRole::GroupEntry: return 3;
        case VarRole::BaseCoord: return 4;
        case VarRole::Uniformizer: return 5;
    }
    return 6;
}

bool valid_var_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

VariableRegistry::VariableRegistry(std::vector<VarInfo> vars) : vars_(std::move(vars)) {
    std::size_t n_unif = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const VarInfo& v = vars_[i];
        if (!valid_var_name(v.name)) throw Error("invalid variable name '" + v.name + "'");
        if (!index_.emplace(v.name, i).second) throw Error("duplicate variable name '" + v.name + "'");
        if (v.role == VarRole::Uniformizer) {
            uniformizer_ = i;
            ++n_unif;
        }
    }
    if (n_unif != 1) throw Error("registry must contain exactly one uniformizer variable");

    // complete d x d blocks for matrix-entry roles
    for (VarRole role : {VarRole::GroupEntry, VarRole::TorsorEntry}) {
        for (int copy = 0; copy <= 3; ++copy) {
            auto block = indices_with_role(role, copy);
            if (block.empty()) continue;
            int maxdim = 0;
            for (std::size_t i : block) maxdim = std::max({maxdim, vars_[i].row, vars_[i].col});
            if (static_cast<int>(block.size()) != maxdim * maxdim)
                throw Error("matrix entry block is not a complete d x d block");
        }
    }

    precedence_.resize(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) precedence_[i] = i;
    std::stable_sort(precedence_.begin(), precedence_.end(), [this](std::size_t a, std::size_t b) {
        int ra = role_rank(vars_[a].role), rb = role_rank(vars_[b].role);
        if (ra != rb) return ra < rb;
        if (vars_[a].copy != vars_[b].copy) return vars_[a].copy < vars_[b].copy;
        return a < b;
    });
}

std::size_t VariableRegistry::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error("no variable named '" + name + "' in registry");
    return it->second;
}

std::vector<std::size_t> VariableRegistry::indices_with_role(VarRole role, int copy) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].role == role && vars_[i].copy == copy) out.push_back(i);
    return out;
}

std::size_t VariableRegistry::entry(VarRole role, int row, int col, int copy) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const VarInfo& v = vars_[i];
        if (v.role == role && v.copy == copy && v.row == row && v.col == col) return i;
    }
    throw Error("registry has no entry (" + std::to_string(row) + "," + std::to_string(col) + ")");
}

std::size_t VariableRegistry::det_inverse(VarRole role, int copy) const {
    auto idx = indices_with_role(role, copy);
    if (idx.size() != 1) throw Error("registry has no unique det-inverse for the requested block");
    return idx[0];
}

int VariableRegistry::block_dim(VarRole role, int copy) const {
    auto block = indices_with_role(role, copy);
    if (block.empty()) return 0;
    int maxdim = 0;
    for (std::size_t i : block) maxdim = std::max({maxdim, vars_[i].row, vars_[i].col});
    return maxdim;
}

std::string VariableRegistry::fresh_name(const std::string& stem) const {
    if (!has(stem)) return stem;
    for (int k = 0;; ++k) {
        std::string cand = stem + "_" + std::to_string(k);
        if (!has(cand)) return cand;
    }
}

std::string copy_suffix(int copy) {
    switch (copy) {
        case 0: return "";
        case 1: return "_p";
        case 2: return "_pp";
        case 3: return "_ppp";
    }
    throw Error("unsupported tensor copy index");
}

std::string entry_name(VarRole role, int row, int col, int copy) {
    std::string stem = role == VarRole::GroupEntry ? "x" : "y";
    std::string body = (row <= 9 && col <= 9)
                           ? "_" + std::to_string(row) + std::to_string(col)
                           : "_" + std::to_string(row) + "_" + std::to_string(col);
    return stem + body + copy_suffix(copy);
}

std::string det_inverse_name(VarRole role, int copy) {
    std::string stem = role == VarRole::DetInverseGroup ? "D" : "Dy";
    return stem + copy_suffix(copy);
}

}  // namespace torext
