#include "o3lg/chain_criteria.hpp"

#include "o3lg/errors.hpp"

#include <algorithm>

namespace o3lg {

namespace {

template <class Lhs, class Rhs>
CriterionVerdict run_chains(const GroupId& h, int ch, const std::vector<GroupId>& adjacent,
                            ChainQuantifier q, Lhs lhs, Rhs rhs)
{
    CriterionVerdict v;
    v.group = h;
    if (ch < 1) {
        v.failing_chains.push_back({h, 0, ch});
        return v;
    }
    std::vector<FailingChain> failed;
    for (const auto& hp : adjacent) {
        const int a = lhs(hp), b = rhs(hp);
        if (a >= b) failed.push_back({hp, a, b});
    }
    const bool ok = q == ChainQuantifier::Every ? failed.empty()
                                                : adjacent.empty() || failed.size() < adjacent.size();
    v.passes = ok;
    if (!ok) v.failing_chains = std::move(failed);
    return v;
}

// Rotation axes of a one-dimensional normaliser can sit at right angles to
// the axis of h' only for these pairs.
bool skew_embedding(const GroupId& h, const GroupId& hp)
{
    const Family a = h.family, b = hp.family;
    const bool c2 = a == Family::Cn && h.n == 2;
    if (b == Family::Dinf) return c2;
    if (b == Family::Cinfv) return a == Family::Cs;
    if (b == Family::Dinfh) return c2 || a == Family::Cs || (a == Family::Cnh && h.n == 2);
    return false;
}

} // namespace

int frequency(const GroupId& h, const Irrep& irrep) { return subduce(h, irrep).c; }

int massless_frequency(const GroupId& h, int c)
{
    if (c < 1) return 0;
    return std::min(c - 1, dims(h).fbar);
}

int massless_frequency(const GroupId& h, const Irrep& irrep)
{
    return massless_frequency(h, frequency(h, irrep));
}

int massive_frequency(const GroupId& h, int c) { return c - massless_frequency(h, c); }

int normaliser_dim(const GroupId& h, const GroupId& hp)
{
    const int a = normaliser_dim(h);
    const int b = normaliser_dim(hp);
    int common = std::min(a, b);
    if (a == 1 && b == 1 && skew_embedding(h, hp)) common = 0;
    return a + b - common;
}

CriterionVerdict michel(const GroupId& h, const std::vector<GroupId>& adjacent, const FrequencyFn& c,
                        ChainQuantifier q)
{
    const int ch = c(h);
    return run_chains(h, ch, adjacent, q, [&](const GroupId& hp) { return c(hp); },
                      [&](const GroupId&) { return ch; });
}

CriterionVerdict michel(const GroupId& h, const Irrep& irrep, const LatticeSlice& slice,
                        ChainQuantifier q)
{
    return michel(h, adjacent_supergroups(h, slice),
                  [&](const GroupId& g) { return frequency(g, irrep); }, q);
}

CriterionVerdict ihrig_golubitsky(const GroupId& h, const std::vector<GroupId>& adjacent,
                                  const FrequencyFn& c, ChainQuantifier q)
{
    const int ch = c(h);
    return run_chains(
        h, ch, adjacent, q, [&](const GroupId& hp) { return c(hp) - normaliser_dim(hp); },
        [&](const GroupId& hp) { return ch - normaliser_dim(h, hp); });
}

CriterionVerdict ihrig_golubitsky(const GroupId& h, const Irrep& irrep, const LatticeSlice& slice,
                                  ChainQuantifier q)
{
    return ihrig_golubitsky(h, adjacent_supergroups(h, slice),
                            [&](const GroupId& g) { return frequency(g, irrep); }, q);
}

CriterionVerdict massive_chain(const GroupId& h, const Irrep& irrep, const LatticeSlice& slice)
{
    auto fm = [&](const GroupId& g) { return massive_frequency(g, frequency(g, irrep)); };
    const int fh = fm(h);
    return run_chains(h, frequency(h, irrep), adjacent_supergroups(h, slice), ChainQuantifier::Every,
                      fm, [&](const GroupId&) { return fh; });
}

int default_n_max(int l) { return std::max(2 * l + 1, 6); }

std::vector<LittleGroupEntry> massive_little_groups(const GroupId& parent, const Irrep& irrep,
                                                    std::optional<int> n_max)
{
    if (parent.family != Family::SO3 && parent.family != Family::O3)
        throw DomainError("massive_little_groups takes SO3 or O3; axial parents have closed forms");
    if (irrep.parent.family != parent.family)
        throw DomainError("irrep " + irrep.label() + " does not belong to " + parent.label());
    const LatticeSlice slice = subgroups(parent, n_max.value_or(default_n_max(irrep.l)));

    std::map<GroupId, int> c;
    for (const auto& g : slice.nodes) c[g] = frequency(g, irrep);
    auto fm = [&](const GroupId& g) { return massive_frequency(g, c.at(g)); };

    std::vector<LittleGroupEntry> out;
    for (const auto& h : slice.nodes) {
        if (c[h] < 1) continue;
        const int fh = fm(h);
        bool ok = true;
        for (const auto& hp : slice.adjacency.at(h))
            if (fm(hp) >= fh) { ok = false; break; }
        if (!ok) continue;
        LittleGroupEntry e;
        e.group = h;
        e.c = c[h];
        e.f0 = massless_frequency(h, e.c);
        e.fm = e.c - e.f0;
        e.stratum_dim = stratum_dimension(e);
        e.f0_dimv = std::min(irrep.dim() - 1, dims(h).fbar);
        try {
            e.rep_vector = rep_vectors(h, irrep);
        } catch (const DomainError&) {
        }
        out.push_back(std::move(e));
    }
    return out;
}

GroupId parity_lift(const GroupId& g)
{
    const Structure s = structure(g);
    if (s.kind != Kind::Proper) throw DomainError(g.label() + " is not a rotation group");
    return from_structure({Kind::Inversion, s.R, s.R});
}

std::vector<LittleGroupEntry> parity_lift(const std::vector<LittleGroupEntry>& entries, int l)
{
    std::vector<LittleGroupEntry> out;
    const Irrep lifted = Irrep::o3(l, 1);
    for (auto e : entries) {
        e.group = parity_lift(e.group);
        e.f0 = massless_frequency(e.group, e.c);
        e.fm = e.c - e.f0;
        e.stratum_dim = stratum_dimension(e);
        e.f0_dimv = std::min(lifted.dim() - 1, dims(e.group).fbar);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return listing_less(a.group, b.group); });
    return out;
}

int stratum_dimension(const LittleGroupEntry& e) { return (3 - dims(e.group).lie_dim) + e.fm; }

} // namespace o3lg
