#pragma once

#include "o3lg/group_catalog.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace o3lg {

// Finite truncation of the subgroup lattice below a parent group.
struct LatticeSlice {
    GroupId parent;
    int n_max = 6;
    std::vector<GroupId> nodes;                          // sorted by listing_less
    std::map<GroupId, std::vector<GroupId>> adjacency;  // adjacent strict supergroups

    bool contains(const GroupId& g) const;
};

// h is contained in k up to conjugacy in O(3).  Reflexive.
bool is_subgroup(const GroupId& h, const GroupId& k);

// Proper-rotation part of the rule table.
bool is_proper_subgroup(const ProperGroup& h, const ProperGroup& k);

// All catalogued groups with 2 <= n <= n_max below parent, plus the
// parameterless ones, with adjacency by transitive reduction.
LatticeSlice subgroups(const GroupId& parent, int n_max);

std::vector<GroupId> adjacent_supergroups(const GroupId& h, const LatticeSlice& slice);

// Element-embedding check for finite groups: a rotation Q with
// Q h Q^T contained in k, or nullopt.
std::optional<Eigen::Matrix3d> embedding(const GroupId& h, const GroupId& k);

// Text export:
//   parent <label> n_max <n>
//   node <label>           (one per node)
//   edge <sub> <super>     (one per adjacency edge)
std::string export_graph(const LatticeSlice& slice);

} // namespace o3lg
