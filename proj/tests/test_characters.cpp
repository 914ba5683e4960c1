#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "o3lg/characters.hpp"
#include "o3lg/errors.hpp"
#include "o3lg/numeric_oracle.hpp"
#include "o3lg/subgroup_lattice.hpp"
#include "oracles.hpp"

#include <numbers>

using namespace o3lg;
using std::numbers::pi;

namespace {

std::vector<GroupId> finite_groups(int n_max)
{
    std::vector<GroupId> out;
    for (auto f : {Family::C1, Family::Ci, Family::Cs, Family::T, Family::Td, Family::Th, Family::O, Family::Oh,
                   Family::Y, Family::Yh})
        out.push_back({f, 0});
    for (auto f : {Family::Cn, Family::Cnh, Family::Cnv, Family::S2n, Family::Dn, Family::Dnh, Family::Dnd})
        for (int n = 2; n <= n_max; ++n) out.push_back(make_group(f, n));
    return out;
}

Eigen::Matrix3d sigma_h()
{
    Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
    m(2, 2) = -1;
    return m;
}

} // namespace

TEST_CASE("chi_rotation")
{
    CHECK(chi_rotation(2, 0.0) == doctest::Approx(5));
    CHECK(chi_rotation(1, pi) == doctest::Approx(-1));
    CHECK(chi_rotation(3, 2 * pi / 3) == doctest::Approx(1));
    for (int l = 0; l <= 12; ++l)
        for (double phi : {0.0, 1e-8, 0.3, 1.0, pi / 2, 2.0, pi})
            CHECK(chi_rotation(l, phi) == doctest::Approx(oracle::chi(l, phi)).epsilon(1e-9));
}

TEST_CASE("chi_o3")
{
    CHECK(chi_o3(1, -1, -Eigen::Matrix3d::Identity()) == doctest::Approx(-3));
    // An axial vector transforms by det(g) g; its trace on sigma_h is -1.
    const Eigen::Matrix3d s = sigma_h();
    CHECK(chi_o3(1, 1, s) == doctest::Approx((s.determinant() * s).trace()));
    CHECK(chi_o3(1, -1, s) == doctest::Approx(s.trace()));
    const Eigen::Matrix3d c4 = rotation({0, 0, 1}, pi / 2);
    CHECK(chi_o3(2, 1, c4) == doctest::Approx(-1));
    CHECK(chi_o3(2, 1, c4) == doctest::Approx(rotation_matrix(2, 1, c4).trace()));
    for (int l = 0; l <= 8; ++l)
        for (double phi : {0.0, 0.7, 2.1, pi})
            CHECK(chi_rotation(l, phi) == doctest::Approx(rotation_matrix(l, 1, rotation({0, 0, 1}, phi)).trace()).epsilon(1e-9));
}

TEST_CASE("irrep parsing")
{
    const GroupId o3{Family::O3, 0}, so3{Family::SO3, 0};
    CHECK(parse_irrep(o3, "4+").l == 4);
    CHECK(parse_irrep(o3, "4+").parity == 1);
    CHECK(parse_irrep(so3, "7").dim() == 15);
    CHECK(parse_irrep({Family::Dinfh, 0}, "E3-").dim() == 2);
    CHECK(parse_irrep({Family::Dinf, 0}, "A2").dim() == 1);
    CHECK(parse_irrep({Family::Cinfh, 0}, "-2+").m == -2);
    CHECK(parse_irrep({Family::Cinfv, 0}, "0").dim() == 1);
    CHECK(parse_irrep({Family::Cinfv, 0}, "3").dim() == 2);
    CHECK_THROWS_AS(parse_irrep(o3, "4"), ParseError);
    CHECK_THROWS_AS(parse_irrep(so3, "4+"), ParseError);
    CHECK_THROWS_AS(parse_irrep({Family::Cinfv, 0}, "-1"), ParseError);
    CHECK_THROWS_AS(parse_irrep({Family::Oh, 0}, "A1g"), ParseError);
    for (const char* s : {"0+", "3-", "12+"}) CHECK(parse_irrep(o3, s).label() == s);
}

TEST_CASE("trace examples")
{
    CHECK(subduce_trace({Family::T, 0}, Irrep::so3(3)).c == 1);
    CHECK(subduce_trace({Family::Oh, 0}, Irrep::o3(4, 1)).c == 1);
    CHECK(subduce_trace(make_group(Family::Cnh, 2), Irrep::o3(6, 1)).c == 7);
    CHECK_THROWS_AS(subduce_trace({Family::Cinf, 0}, Irrep::o3(1, 1)), DomainError);
    CHECK_THROWS_AS(subduce_trace({Family::Cs, 0}, Irrep::so3(1)), DomainError);
}

TEST_CASE("trace against explicit character sums")
{
    for (const auto& g : finite_groups(8)) {
        const auto els = element_matrices(g);
        for (int l = 0; l <= 8; ++l)
            for (int p : {1, -1}) {
                CAPTURE(g.label());
                CAPTURE(l);
                CHECK(subduce_trace(g, Irrep::o3(l, p)).c == doctest::Approx(oracle::frequency(els, l, p)));
            }
    }
}

TEST_CASE("continuous groups")
{
    CHECK(subduce_continuous({Family::Cinfv, 0}, Irrep::o3(3, -1)).c == 1);
    CHECK(subduce_continuous({Family::Dinf, 0}, Irrep::o3(0, -1)).c == 1);
    CHECK(subduce_continuous({Family::Dinfh, 0}, Irrep::o3(5, 1)).c == 0);
    for (int l = 0; l <= 10; ++l)
        for (int p : {1, -1}) {
            const Irrep ir = Irrep::o3(l, p);
            const bool even = l % 2 == 0;
            CHECK(subduce_continuous({Family::Cinf, 0}, ir).c == 1);
            CHECK(subduce_continuous({Family::Cinfv, 0}, ir).c == (p == (even ? 1 : -1)));
            CHECK(subduce_continuous({Family::Cinfh, 0}, ir).c == (p == 1));
            CHECK(subduce_continuous({Family::Dinf, 0}, ir).c == even);
            CHECK(subduce_continuous({Family::Dinfh, 0}, ir).c == (even && p == 1));
            CHECK(subduce_continuous({Family::SO3, 0}, ir).c == (l == 0));
            CHECK(subduce_continuous({Family::O3, 0}, ir).c == (l == 0 && p == 1));
        }
}

TEST_CASE("closed forms")
{
    CHECK(subduce_closed({Family::T, 0}, Irrep::so3(6)).c == 2);
    CHECK(subduce_closed(make_group(Family::Dn, 3), Irrep::so3(4)).c == 2);
    CHECK(subduce_closed({Family::Y, 0}, Irrep::so3(6)).c == 1);
    CHECK(subduce({Family::Cinfv, 0}, Irrep::o3(3, -1)).method == SubductionMethod::AnalyticContinuous);
    CHECK(subduce(make_group(Family::Dnd, 3), Irrep::o3(4, 1)).c == 2);
    CHECK(subduce({Family::C1, 0}, Irrep::o3(5, -1)).c == 11);
    for (const auto& g : finite_groups(12))
        for (int l = 0; l <= 30; ++l)
            for (int p : {1, -1}) {
                CAPTURE(g.label());
                CAPTURE(l);
                CHECK(subduce_closed(g, Irrep::o3(l, p)).c == subduce_trace(g, Irrep::o3(l, p)).c);
            }
}

TEST_CASE("monotone under inclusion")
{
    const auto slice = subgroups({Family::O3, 0}, 6);
    for (const auto& h : slice.nodes)
        for (const auto& k : adjacent_supergroups(h, slice))
            for (int l = 0; l <= 6; ++l)
                for (int p : {1, -1}) {
                    CAPTURE(h.label());
                    CAPTURE(k.label());
                    CHECK(subduce(h, Irrep::o3(l, p)).c >= subduce(k, Irrep::o3(l, p)).c);
                }
}

TEST_CASE("representation vectors")
{
    const std::vector<std::string> c1{"0", "2+", "3±"};
    CHECK(rep_vectors({Family::C1, 0}, Irrep::so3(3)) == c1);
    CHECK(rep_vectors({Family::Dinf, 0}, Irrep::so3(4)) == std::vector<std::string>{"0"});
    CHECK(rep_vectors({Family::Cs, 0}, Irrep::o3(5, -1)) == std::vector<std::string>{"2-", "3-", "4-", "5-"});
    const std::vector<std::string> d3{"0", "3-"};
    CHECK(rep_vectors(make_group(Family::Dn, 3), Irrep::so3(4)) == d3);
    CHECK(expand_labels(c1) == std::vector<std::string>{"0", "2+", "3+", "3-"});
    CHECK_THROWS_AS(rep_vectors({Family::O, 0}, Irrep::so3(4)), DomainError);
    CHECK_THROWS_AS(rep_vectors({Family::Oh, 0}, Irrep::o3(4, 1)), DomainError);
}

TEST_CASE("tetrahedral characters")
{
    const auto els = element_matrices({Family::T, 0});
    const auto irs = tetrahedral_irreps();
    REQUIRE(irs.size() == 4);
    for (const auto& a : irs)
        for (const auto& b : irs) {
            std::complex<double> s = 0;
            for (const auto& g : els) s += std::conj(tetrahedral_character(a.name, g)) * tetrahedral_character(b.name, g);
            s /= 12.0;
            CHECK(std::abs(s - (a.name == b.name ? 1.0 : 0.0)) < 1e-9);
        }
    for (const auto& a : irs)
        CHECK(tetrahedral_character(a.name, Eigen::Matrix3d::Identity()).real() == doctest::Approx(a.dim));
}
