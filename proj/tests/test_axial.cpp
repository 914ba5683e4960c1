#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "o3lg/axial_little_groups.hpp"
#include "o3lg/errors.hpp"
#include "o3lg/subgroup_lattice.hpp"

using namespace o3lg;

namespace {

GroupId g(const char* s) { return canonicalize_label(s); }

AxialResult on(const char* parent, const char* irrep)
{
    return axial_little_group(parse_irrep(g(parent), irrep));
}

} // namespace

TEST_CASE("Cinf")
{
    CHECK(little_group_cinf(0).little_group == g("Cinf"));
    CHECK(little_group_cinf(3).little_group == g("C3"));
    CHECK(little_group_cinf(-2).little_group == g("C2"));
    CHECK(on("Cinf", "-5").little_group == g("C5"));
}

TEST_CASE("Cinfh")
{
    CHECK(little_group_cinfh(2, +1).little_group == g("C2h"));
    CHECK(little_group_cinfh(3, -1).little_group == g("C3h"));
    CHECK(little_group_cinfh(1, +1).little_group == g("Ci"));
    CHECK(little_group_cinfh(1, -1).little_group == g("Cs"));
    CHECK(little_group_cinfh(3, +1).little_group == g("C3i"));
    CHECK(little_group_cinfh(0, +1).little_group == g("Cinfh"));
    CHECK(little_group_cinfh(0, -1).little_group == g("Cinf"));
}

TEST_CASE("Cinfh even n, negative parity")
{
    // Rz(pi/n) followed by inversion fixes exp(i n phi) with odd parity.
    for (int n : {2, 4, 6}) {
        const auto r = little_group_cinfh(n, -1);
        CHECK(r.little_group == make_group(Family::S2n, n));
        CHECK(r.flagged);
        CHECK(r.printed() == make_group(Family::Cn, n));
    }
    CHECK_FALSE(little_group_cinfh(3, -1).flagged);
}

TEST_CASE("Cinfv")
{
    CHECK(little_group_cinfv(0).little_group == g("Cinfv"));
    CHECK(little_group_cinfv(0).vector_dim == 1);
    CHECK(little_group_cinfv(1).little_group == g("Cs"));
    CHECK(little_group_cinfv(1).vector_dim == 2);
    CHECK(little_group_cinfv(4).little_group == g("C4v"));
    CHECK(little_group_cinfv(4).vector_dim == 2);
    CHECK_THROWS_AS(little_group_cinfv(-1), DomainError);
}

TEST_CASE("Dinf")
{
    CHECK(on("Dinf", "A1").little_group == g("Dinf"));
    const auto a2 = on("Dinf", "A2");
    CHECK(a2.little_group == g("Cinf"));
    CHECK(a2.vector_dim == 2);  // as printed, though A2 is one-dimensional
    CHECK(a2.flagged);
    CHECK(on("Dinf", "E3").little_group == g("D3"));
    CHECK(on("Dinf", "E3").vector_dim == 2);
}

TEST_CASE("Dinfh")
{
    CHECK(on("Dinfh", "E2+").little_group == g("D2h"));
    CHECK(on("Dinfh", "E3-").little_group == g("D3h"));
    CHECK(on("Dinfh", "E3+").little_group == g("D3d"));
    CHECK(on("Dinfh", "E2-").little_group == g("D2d"));
    CHECK(on("Dinfh", "A1+").little_group == g("Dinfh"));
    CHECK(on("Dinfh", "A1-").little_group == g("Dinf"));
    CHECK(on("Dinfh", "A2+").little_group == g("Cinfh"));
    CHECK(on("Dinfh", "A2-").little_group == g("Cinfv"));
    CHECK(on("Dinfh", "E1+").little_group == g("C2h"));
    const auto e1m = on("Dinfh", "E1-");
    CHECK(e1m.little_group == g("C2v"));
    CHECK(e1m.flagged);
    CHECK(e1m.printed() == g("C2h"));
}

TEST_CASE("irrep enumeration")
{
    CHECK(axial_irreps(g("Cinf"), 3).size() == 7);
    CHECK(axial_irreps(g("Cinfh"), 2).size() == 10);
    CHECK(axial_irreps(g("Cinfv"), 4).size() == 5);
    CHECK(axial_irreps(g("Dinf"), 4).size() == 6);
    CHECK(axial_irreps(g("Dinfh"), 4).size() == 12);
    CHECK_THROWS_AS(axial_irreps(g("D4h"), 2), DomainError);
    CHECK_THROWS_AS(axial_little_group(Irrep::so3(2)), DomainError);
    for (const char* p : {"Cinf", "Cinfh", "Cinfv", "Dinf", "Dinfh"})
        for (const auto& ir : axial_irreps(g(p), 4)) {
            CAPTURE(ir.label());
            const auto r = axial_little_group(ir);
            CHECK(is_subgroup(r.little_group, g(p)));
        }
}
