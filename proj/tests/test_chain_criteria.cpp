#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "o3lg/chain_criteria.hpp"

#include <algorithm>
#include <set>

using namespace o3lg;

namespace {

GroupId g(const char* s) { return canonicalize_label(s); }

std::set<GroupId> groups(const std::vector<LittleGroupEntry>& es)
{
    std::set<GroupId> out;
    for (const auto& e : es) out.insert(e.group);
    return out;
}

std::set<GroupId> gs(std::initializer_list<const char*> xs)
{
    std::set<GroupId> out;
    for (auto x : xs) out.insert(g(x));
    return out;
}

const LittleGroupEntry& entry(const std::vector<LittleGroupEntry>& es, const char* label)
{
    const auto it = std::find_if(es.begin(), es.end(), [&](const auto& e) { return e.group == g(label); });
    REQUIRE(it != es.end());
    return *it;
}

LatticeSlice slice_for(const Irrep& ir)
{
    return subgroups(ir.parent, default_n_max(ir.l));
}

} // namespace

TEST_CASE("massless frequencies")
{
    CHECK(massless_frequency(g("C1"), Irrep::so3(2)) == 3);
    for (int l = 1; l <= 6; ++l) CHECK(massless_frequency(g("Cinf"), Irrep::so3(l)) == 0);
    CHECK(massless_frequency(g("Cs"), Irrep::o3(1, -1)) == 1);
    CHECK(massless_frequency(g("C1"), 1) == 0);
    CHECK(massive_frequency(g("C1"), 5) == 2);
}

TEST_CASE("default slice size")
{
    CHECK(default_n_max(0) == 6);
    CHECK(default_n_max(2) == 6);
    CHECK(default_n_max(3) == 7);
    CHECK(default_n_max(9) == 19);
}

TEST_CASE("Michel and IG false positives")
{
    const auto l3 = Irrep::so3(3);
    const auto s = slice_for(l3);
    CHECK(michel(g("D2"), l3, s, ChainQuantifier::Some).passes);
    CHECK(ihrig_golubitsky(g("D2"), l3, s, ChainQuantifier::Some).passes);
    CHECK(michel(g("T"), l3, s).passes);
    CHECK_FALSE(massive_chain(g("D2"), l3, s).passes);

    const auto v = Irrep::o3(1, -1);
    CHECK(michel(g("Cs"), v, slice_for(v)).passes);
    CHECK_FALSE(massive_chain(g("Cs"), v, slice_for(v)).passes);

    const auto id = Irrep::o3(0, 1);
    CHECK(ihrig_golubitsky(g("O3"), id, slice_for(id)).passes);
}

TEST_CASE("IG normaliser correction")
{
    for (int n = 2; n <= 6; ++n) CHECK(normaliser_dim(make_group(Family::Cn, n), g("Cinf")) == 1);
    CHECK(normaliser_dim(g("D2"), g("T")) == 0);
}

TEST_CASE("massive little groups")
{
    CHECK(groups(massive_little_groups({Family::SO3, 0}, Irrep::so3(3))) == gs({"Cinf", "T", "D3", "C3", "C2", "C1"}));
    CHECK(groups(massive_little_groups({Family::O3, 0}, Irrep::o3(4, 1))) ==
          gs({"Dinfh", "Oh", "D4h", "D3d", "D2h", "C2h", "Ci"}));
    CHECK(groups(massive_little_groups({Family::O3, 0}, Irrep::o3(1, -1))) == gs({"Cinfv"}));
    CHECK(groups(massive_little_groups({Family::O3, 0}, Irrep::o3(0, 1))) == gs({"O3"}));
    CHECK(groups(massive_little_groups({Family::SO3, 0}, Irrep::so3(0))) == gs({"SO3"}));
}

TEST_CASE("entry bookkeeping")
{
    const auto l2 = massive_little_groups({Family::SO3, 0}, Irrep::so3(2));
    const auto& d2 = entry(l2, "D2");
    CHECK(d2.c == 2);
    CHECK(d2.fm == 2);
    CHECK(stratum_dimension(d2) == 5);
    const auto l1 = massive_little_groups({Family::SO3, 0}, Irrep::so3(1));
    CHECK(stratum_dimension(entry(l1, "Cinf")) == 3);
    const auto o0 = massive_little_groups({Family::O3, 0}, Irrep::o3(0, 1));
    CHECK(stratum_dimension(entry(o0, "O3")) == 1);
    for (int l = 0; l <= 6; ++l)
        for (const auto& e : massive_little_groups({Family::SO3, 0}, Irrep::so3(l))) {
            CAPTURE(e.group.label());
            CHECK(e.fm >= 1);
            CHECK(e.f0 + e.fm == e.c);
            CHECK(e.f0 == std::min(e.c - 1, dims(e.group).fbar));
            CHECK(e.stratum_dim == 3 - dims(e.group).lie_dim + e.fm);
        }
}

TEST_CASE("output order")
{
    const auto es = massive_little_groups({Family::SO3, 0}, Irrep::so3(6));
    REQUIRE(es.size() > 2);
    for (std::size_t i = 1; i < es.size(); ++i) {
        const auto a = group_order(es[i - 1].group), b = group_order(es[i].group);
        CHECK((!a || (b && *a >= *b)));
    }
}

TEST_CASE("parity lift")
{
    const auto lift = [](const char* s) { return parity_lift(g(s)); };
    CHECK(lift("T") == g("Th"));
    CHECK(lift("D3") == g("D3d"));
    CHECK(lift("C3") == g("C3i"));
    CHECK(lift("C2") == g("C2h"));
    CHECK(lift("C1") == g("Ci"));
    CHECK(lift("Cinf") == g("Cinfh"));
    CHECK(lift("O") == g("Oh"));
    CHECK(lift("D4") == g("D4h"));
    CHECK(lift("D2") == g("D2h"));
    CHECK(lift("SO3") == g("O3"));
    for (int l = 0; l <= 6; ++l)
        CHECK(groups(parity_lift(massive_little_groups({Family::SO3, 0}, Irrep::so3(l)), l)) ==
              groups(massive_little_groups({Family::O3, 0}, Irrep::o3(l, 1))));
}

TEST_CASE("documented absences")
{
    const auto o3 = GroupId{Family::O3, 0};
    CHECK_FALSE(groups(massive_little_groups({Family::SO3, 0}, Irrep::so3(3))).count(g("D2")));
    CHECK_FALSE(groups(massive_little_groups(o3, Irrep::o3(1, -1))).count(g("Cs")));
    CHECK_FALSE(groups(massive_little_groups(o3, Irrep::o3(1, 1))).count(g("Ci")));
    CHECK_FALSE(groups(massive_little_groups(o3, Irrep::o3(2, 1))).count(g("Ci")));
    CHECK_FALSE(groups(massive_little_groups(o3, Irrep::o3(3, 1))).count(g("D2h")));
    CHECK_FALSE(groups(massive_little_groups(o3, Irrep::o3(4, 1))).count(g("C3i")));
    CHECK_FALSE(groups(massive_little_groups(o3, Irrep::o3(4, 1))).count(g("C4h")));
    CHECK_FALSE(groups(massive_little_groups(o3, Irrep::o3(3, -1))).count(g("T")));
    CHECK_FALSE(groups(massive_little_groups(o3, Irrep::o3(4, -1))).count(g("T")));
    CHECK(groups(massive_little_groups(o3, Irrep::o3(3, -1))).count(g("Td")));
}

TEST_CASE("4- keeps C2 and D4d")
{
    const auto es = groups(massive_little_groups({Family::O3, 0}, Irrep::o3(4, -1)));
    CHECK(es.count(g("C2")));
    CHECK(es.count(g("D4d")));
    CHECK(es.count(g("Dinf")));
    CHECK(es.count(g("C2v")));
    CHECK(es.count(g("D2d")));
    CHECK(es.count(g("D3h")));
    const auto c2 = entry(massive_little_groups({Family::O3, 0}, Irrep::o3(4, -1)), "C2");
    CHECK(c2.c == 5);
    CHECK(c2.fm == 4);
}

TEST_CASE("rejections carry a failing chain")
{
    for (const auto& ir : {Irrep::so3(3), Irrep::so3(4), Irrep::o3(3, -1), Irrep::o3(4, 1), Irrep::o3(1, -1)}) {
        const auto s = slice_for(ir);
        for (const auto& h : s.nodes) {
            const int c = frequency(h, ir);
            if (c == 0) continue;
            const auto v = massive_chain(h, ir, s);
            if (v.passes) continue;
            CAPTURE(h.label());
            REQUIRE_FALSE(v.failing_chains.empty());
            for (const auto& f : v.failing_chains) {
                CHECK(is_subgroup(h, f.supergroup));
                CHECK(f.lhs >= f.rhs);
            }
        }
    }
}

TEST_CASE("Michel and IG strictly contain the massive set")
{
    for (const auto& [ir, extra] : {std::pair{Irrep::so3(3), "D2"}, std::pair{Irrep::o3(1, -1), "Cs"}}) {
        const auto s = slice_for(ir);
        std::set<GroupId> mich, ig, mass;
        for (const auto& h : s.nodes) {
            if (frequency(h, ir) == 0) continue;
            if (michel(h, ir, s, ChainQuantifier::Some).passes) mich.insert(h);
            if (ihrig_golubitsky(h, ir, s, ChainQuantifier::Some).passes) ig.insert(h);
            if (massive_chain(h, ir, s).passes) mass.insert(h);
        }
        CHECK(std::includes(mich.begin(), mich.end(), mass.begin(), mass.end()));
        CHECK(std::includes(ig.begin(), ig.end(), mass.begin(), mass.end()));
        CHECK(mich.count(g(extra)));
        CHECK_FALSE(mass.count(g(extra)));
    }
}
