#pragma once

#include "o3lg/characters.hpp"
#include "o3lg/subgroup_lattice.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace o3lg {

struct LittleGroupEntry {
    GroupId group;
    int c = 0;
    int f0 = 0;
    int fm = 0;
    int stratum_dim = 0;
    std::optional<std::vector<std::string>> rep_vector;
    // min(dim V - 1, fbar); differs from f0 only when c - 1 < fbar.
    int f0_dimv = 0;
};

struct FailingChain {
    GroupId supergroup;
    int lhs = 0;  // quantity on the supergroup side
    int rhs = 0;  // quantity on the candidate side; the chain fails when lhs >= rhs
};

struct CriterionVerdict {
    GroupId group;
    bool passes = false;
    std::vector<FailingChain> failing_chains;
};

// Every: the inequality must hold along every adjacent chain.
// Some: one satisfied chain suffices (how the criteria were applied in
// practice; the D2 false positive at l = 3 needs this reading).
enum class ChainQuantifier { Every, Some };

using FrequencyFn = std::function<int(const GroupId&)>;

// c(h) for an SO3/O3 irrep, closed form where available.
int frequency(const GroupId& h, const Irrep& irrep);

int massless_frequency(const GroupId& h, int c);
int massless_frequency(const GroupId& h, const Irrep& irrep);
int massive_frequency(const GroupId& h, int c);

// Lie dimension of N(h, h') = {g : g h' g^-1 contains h}.
int normaliser_dim(const GroupId& h, const GroupId& hp);

CriterionVerdict michel(const GroupId& h, const std::vector<GroupId>& adjacent, const FrequencyFn& c,
                        ChainQuantifier q = ChainQuantifier::Every);
CriterionVerdict michel(const GroupId& h, const Irrep& irrep, const LatticeSlice& slice,
                        ChainQuantifier q = ChainQuantifier::Every);

CriterionVerdict ihrig_golubitsky(const GroupId& h, const std::vector<GroupId>& adjacent,
                                  const FrequencyFn& c, ChainQuantifier q = ChainQuantifier::Every);
CriterionVerdict ihrig_golubitsky(const GroupId& h, const Irrep& irrep, const LatticeSlice& slice,
                                  ChainQuantifier q = ChainQuantifier::Every);

// Verdict of the massive chain criterion: fm(h') < fm(h) on every adjacent chain.
CriterionVerdict massive_chain(const GroupId& h, const Irrep& irrep, const LatticeSlice& slice);

int default_n_max(int l);

// Little groups of an irrep of SO3 or O3, sorted by listing_less.
std::vector<LittleGroupEntry> massive_little_groups(const GroupId& parent, const Irrep& irrep,
                                                    std::optional<int> n_max = std::nullopt);

GroupId parity_lift(const GroupId& g);
std::vector<LittleGroupEntry> parity_lift(const std::vector<LittleGroupEntry>& entries, int l);

int stratum_dimension(const LittleGroupEntry& e);

} // namespace o3lg
