#include "o3lg/subgroup_lattice.hpp"

#include "o3lg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace o3lg {

namespace {

using F = ProperFamily;

// Twisted groups named by how K sits over R.
enum class Twist { T2C, V, T2D, Td, Vinf };

struct TwistId {
    Twist t;
    int n = 0;
    bool operator==(const TwistId&) const = default;
};

TwistId twist_of(const Structure& s)
{
    if (s.K.f == F::C) return {Twist::T2C, s.R.n};
    if (s.K.f == F::D && s.R.f == F::C) return {Twist::V, s.R.n};
    if (s.K.f == F::D) return {Twist::T2D, s.R.n};
    if (s.K.f == F::O) return {Twist::Td, 0};
    return {Twist::Vinf, 0};
}

bool odd_multiple(int big, int small) { return big % small == 0 && (big / small) % 2 == 1; }

bool twisted_in_twisted(const TwistId& a, const TwistId& b)
{
    if (a == b) return true;
    if (a.t == Twist::T2C && a.n == 1) {
        // Cs: every twisted group has a mirror except S_{2N} with N even.
        if (b.t == Twist::T2C) return b.n % 2 == 1;
        return true;
    }
    switch (b.t) {
    case Twist::T2C:
        return a.t == Twist::T2C && odd_multiple(b.n, a.n);
    case Twist::V:
        return a.t == Twist::V && b.n % a.n == 0;
    case Twist::T2D:
        if (a.t == Twist::T2C || a.t == Twist::T2D) return odd_multiple(b.n, a.n);
        if (a.t == Twist::V) return b.n % a.n == 0 || a.n == 2;
        return false;
    case Twist::Td:
        if (a.t == Twist::T2C) return a.n == 1 || a.n == 2;
        if (a.t == Twist::V) return a.n == 2 || a.n == 3;
        if (a.t == Twist::T2D) return a.n == 2;
        return false;
    case Twist::Vinf:
        return a.t == Twist::V || a.t == Twist::Vinf;
    }
    return false;
}

} // namespace

bool is_proper_subgroup(const ProperGroup& a, const ProperGroup& b)
{
    if (b.f == F::SO3) return true;
    if (a.f == F::SO3) return false;
    switch (a.f) {
    case F::C: {
        const int m = a.n;
        if (m == 1) return true;
        switch (b.f) {
        case F::C: return b.n % m == 0;
        case F::D: return b.n % m == 0 || m == 2;
        case F::T: return m == 2 || m == 3;
        case F::O: return m >= 2 && m <= 4;
        case F::Y: return m == 2 || m == 3 || m == 5;
        default: return true;  // Cinf, Dinf
        }
    }
    case F::D: {
        const int m = a.n;
        switch (b.f) {
        case F::D: return b.n % m == 0;
        case F::T: return m == 2;
        case F::O: return m >= 2 && m <= 4;
        case F::Y: return m == 2 || m == 3 || m == 5;
        case F::Dinf: return true;
        default: return false;
        }
    }
    case F::T: return b.f == F::T || b.f == F::O || b.f == F::Y;
    case F::O: return b.f == F::O;
    case F::Y: return b.f == F::Y;
    case F::Cinf: return b.f == F::Cinf || b.f == F::Dinf;
    case F::Dinf: return b.f == F::Dinf;
    default: return false;
    }
}

bool is_subgroup(const GroupId& h, const GroupId& k)
{
    const Structure a = structure(h);
    const Structure b = structure(k);
    switch (b.kind) {
    case Kind::Inversion: return is_proper_subgroup(a.K, b.R);
    case Kind::Proper: return a.kind == Kind::Proper && is_proper_subgroup(a.R, b.R);
    case Kind::Twisted: break;
    }
    if (a.kind == Kind::Inversion) return false;
    if (a.kind == Kind::Proper) return is_proper_subgroup(a.R, b.R);
    return twisted_in_twisted(twist_of(a), twist_of(b));
}

bool LatticeSlice::contains(const GroupId& g) const
{
    return std::find(nodes.begin(), nodes.end(), g) != nodes.end();
}

LatticeSlice subgroups(const GroupId& parent, int n_max)
{
    if (n_max < 2) throw DomainError("n_max must be at least 2");
    LatticeSlice s;
    s.parent = parent;
    s.n_max = n_max;

    std::vector<GroupId> cand;
    for (Family f : {Family::C1, Family::Ci, Family::Cs, Family::T, Family::Td, Family::Th,
                     Family::O, Family::Oh, Family::Y, Family::Yh, Family::Cinf, Family::Cinfh,
                     Family::Cinfv, Family::Dinf, Family::Dinfh, Family::SO3, Family::O3})
        cand.push_back({f, 0});
    for (Family f : {Family::Cn, Family::Cnh, Family::Cnv, Family::S2n, Family::Dn, Family::Dnh,
                     Family::Dnd})
        for (int n = 2; n <= n_max; ++n) cand.push_back({f, n});
    if (is_finite(parent) && parent.n > n_max) cand.push_back(parent);

    for (const auto& g : cand)
        if (is_subgroup(g, parent)) s.nodes.push_back(g);
    std::sort(s.nodes.begin(), s.nodes.end(), listing_less);
    s.nodes.erase(std::unique(s.nodes.begin(), s.nodes.end()), s.nodes.end());

    // Strict containment matrix, then transitive reduction.
    const std::size_t n = s.nodes.size();
    std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            lt[i][j] = i != j && is_subgroup(s.nodes[i], s.nodes[j]);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<GroupId> adj;
        for (std::size_t j = 0; j < n; ++j) {
            if (!lt[i][j]) continue;
            bool direct = true;
            for (std::size_t m = 0; m < n && direct; ++m)
                if (lt[i][m] && lt[m][j]) direct = false;
            if (direct) adj.push_back(s.nodes[j]);
        }
        s.adjacency[s.nodes[i]] = std::move(adj);
    }
    return s;
}

std::vector<GroupId> adjacent_supergroups(const GroupId& h, const LatticeSlice& slice)
{
    auto it = slice.adjacency.find(h);
    if (it == slice.adjacency.end())
        throw DomainError(h.label() + " is not in the slice below " + slice.parent.label());
    return it->second;
}

std::optional<Eigen::Matrix3d> embedding(const GroupId& h, const GroupId& k)
{
    if (!is_finite(h) || !is_finite(k)) throw DomainError("embedding search needs finite groups");
    if (*group_order(k) % *group_order(h) != 0) return std::nullopt;
    return find_conjugation(generators(h), element_matrices(k));
}

std::string export_graph(const LatticeSlice& slice)
{
    std::ostringstream os;
    os << "parent " << slice.parent.label() << " n_max " << slice.n_max << '\n';
    for (const auto& g : slice.nodes) os << "node " << g.label() << '\n';
    for (const auto& g : slice.nodes)
        for (const auto& k : slice.adjacency.at(g)) os << "edge " << g.label() << ' ' << k.label() << '\n';
    return os.str();
}

} // namespace o3lg
