#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "o3lg/errors.hpp"
#include "o3lg/numeric_oracle.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace o3lg;

namespace {

GroupId g(const char* s) { return canonicalize_label(s); }

Eigen::Matrix3d random_rotation(std::mt19937_64& rng)
{
    std::normal_distribution<double> n;
    Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
    return q.normalized().toRotationMatrix();
}

Eigen::Vector3d unit(double theta, double phi)
{
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

CoeffVector random_vector(int l, int parity, std::mt19937_64& rng)
{
    std::normal_distribution<double> n;
    CoeffVector a = CoeffVector::zero(l, parity);
    for (int i = 0; i < a.coeffs.size(); ++i) a.coeffs(i) = n(rng);
    return a;
}

// Span of the invariant basis contains v (unit normalised).
bool in_span(const std::vector<CoeffVector>& basis, const Eigen::VectorXd& v)
{
    Eigen::VectorXd r = v.normalized();
    for (const auto& b : basis) r -= b.coeffs.dot(r) * b.coeffs;
    return r.norm() < 1e-8;
}

} // namespace

TEST_CASE("coefficient labels")
{
    CHECK(coeff_label(0) == "0");
    CHECK(coeff_label(1) == "1+");
    CHECK(coeff_label(2) == "1-");
    CHECK(coeff_label(4) == "2-");
    CHECK(coeff_index("3+", 3) == 5);
    CHECK_THROWS_AS(coeff_index("4+", 3), ParseError);
    CHECK_THROWS_AS(coeff_index("x", 3), ParseError);
}

TEST_CASE("tesseral functions")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int l = 0; l <= 8; ++l)
        for (const auto& lab : oracle::labels(l))
            for (int k = 0; k < 5; ++k) {
                const double th = std::acos(1 - 2 * u(rng)), ph = 2 * M_PI * u(rng);
                CHECK(tesseral_eval(l, lab, th, ph) == doctest::Approx(oracle::tesseral(l, lab, th, ph)).epsilon(1e-9));
            }
    // 3z^2 - r^2, x^2 - y^2 and xy shapes
    CHECK(tesseral_eval(2, "0", 0.0, 0.0) / tesseral_eval(2, "0", M_PI / 2, 0.3) == doctest::Approx(-2.0));
    CHECK(tesseral_eval(2, "2+", M_PI / 2, 0.0) > 0);
    CHECK(tesseral_eval(2, "2+", M_PI / 2, M_PI / 2) < 0);
    const double xy = tesseral_eval(2, "2-", M_PI / 2, M_PI / 4);
    CHECK(xy > 0);
    CHECK(tesseral_eval(2, "2-", M_PI / 2, -M_PI / 4) == doctest::Approx(-xy));
    CHECK(tesseral_eval(2, "2-", M_PI / 2, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("rotation matrices")
{
    std::mt19937_64 rng(11);
    for (int l = 0; l <= 8; ++l) {
        CAPTURE(l);
        const Eigen::Matrix3d a = random_rotation(rng), b = random_rotation(rng);
        const auto da = rotation_matrix(l, 1, a), db = rotation_matrix(l, 1, b);
        const auto n = 2 * l + 1;
        CHECK((da.transpose() * da - Eigen::MatrixXd::Identity(n, n)).norm() < 1e-10);
        CHECK((rotation_matrix(l, 1, Eigen::Matrix3d(a * b)) - da * db).norm() < 1e-9);
        CHECK((rotation_matrix(l, -1, Eigen::Matrix3d(-a)) + da).norm() < 1e-9);
        CHECK((rotation_matrix(l, 1, Eigen::Matrix3d(-a)) - da).norm() < 1e-9);
        CHECK((rotation_matrix(l, -1, Eigen::Matrix3d(-Eigen::Matrix3d::Identity())) +
               Eigen::MatrixXd::Identity(n, n)).norm() < 1e-12);
        // (D(g) a)(r) = a(g^-1 r)
        const CoeffVector v = random_vector(l, 1, rng);
        const CoeffVector w{l, 1, da * v.coeffs};
        for (int k = 0; k < 20; ++k) {
            const Eigen::Vector3d r = unit(std::acos(1 - 2 * (k + 0.5) / 20.0), 2.4 * k);
            CHECK(eval(w, r) == doctest::Approx(eval(v, a.transpose() * r)).epsilon(1e-9));
        }
    }
    // Rz mixes 1+ and 1- and fixes 0
    const double phi = 0.7;
    const auto d = rotation_matrix(1, 1, Eigen::Matrix3d(Eigen::AngleAxisd(phi, Eigen::Vector3d::UnitZ())));
    CHECK(d(0, 0) == doctest::Approx(1.0));
    CHECK(d(1, 1) == doctest::Approx(std::cos(phi)));
    CHECK(std::abs(d(1, 2)) == doctest::Approx(std::sin(phi)));
}

TEST_CASE("projectors")
{
    for (const auto& [h, ir] : {std::pair{g("Oh"), Irrep::o3(4, 1)}, std::pair{g("D3"), Irrep::so3(4)},
                                std::pair{g("Td"), Irrep::o3(3, -1)}, std::pair{g("C2h"), Irrep::o3(6, 1)}}) {
        const auto p = projector(h, ir);
        CHECK((p * p - p).norm() < 1e-10);
        CHECK((p - p.transpose()).norm() < 1e-10);
        CHECK(projector_rank(h, ir) == subduce(h, ir).c);
    }
    CHECK(projector_rank(g("C2h"), Irrep::o3(6, 1)) == 7);
}

TEST_CASE("special invariants")
{
    const auto oh = invariant_basis(g("Oh"), Irrep::o3(4, 1));
    REQUIRE(oh.size() == 1);
    Eigen::VectorXd z = Eigen::VectorXd::Zero(9);
    z(coeff_index("0", 4)) = std::sqrt(7.0);
    z(coeff_index("4+", 4)) = std::sqrt(5.0);
    CHECK(in_span(oh, z));
    const CoeffVector zeta{4, 1, z / (2 * std::sqrt(3.0))};
    for (const auto& m : element_matrices(g("Oh")))
        CHECK((rotation_matrix(4, 1, m) * zeta.coeffs - zeta.coeffs).norm() < 1e-10);

    const auto y = invariant_basis(g("Y"), Irrep::so3(6));
    REQUIRE(y.size() == 1);
    Eigen::VectorXd yv = Eigen::VectorXd::Zero(13);
    yv(coeff_index("0", 6)) = std::sqrt(11.0);
    yv(coeff_index("5+", 6)) = -std::sqrt(14.0);
    CHECK(in_span(y, yv));

    const auto t = invariant_basis(g("T"), Irrep::so3(6));
    REQUIRE(t.size() == 2);
    Eigen::VectorXd t1 = Eigen::VectorXd::Zero(13), t2 = Eigen::VectorXd::Zero(13);
    t1(coeff_index("0", 6)) = -1;
    t1(coeff_index("4+", 6)) = std::sqrt(7.0);
    t2(coeff_index("2+", 6)) = -std::sqrt(11.0);
    t2(coeff_index("6+", 6)) = std::sqrt(5.0);
    CHECK(in_span(t, t1));
    CHECK(in_span(t, t2));
}

TEST_CASE("symmetry detection")
{
    CoeffVector z0 = CoeffVector::zero(2, 1);
    z0["0"] = 1;
    CHECK(detect_symmetry(z0).group == g("Dinfh"));

    std::mt19937_64 rng(3);
    const auto gen = detect_symmetry(random_vector(2, 1, rng));
    CHECK(gen.group == g("D2h"));

    CoeffVector c2v = CoeffVector::zero(3, -1);
    c2v["0"] = 0.8;
    c2v["2+"] = 0.8;
    c2v["2-"] = -0.35;
    CHECK(detect_symmetry(c2v).group == g("C2v"));
    const auto rot = rotation_matrix(3, -1, random_rotation(rng));
    CHECK(detect_symmetry(CoeffVector{3, -1, rot * c2v.coeffs}).group == g("C2v"));
    CHECK_THROWS_AS(detect_symmetry(CoeffVector::zero(3, 1)), ZeroVectorError);
}

TEST_CASE("canonical forms")
{
    std::mt19937_64 rng(5);
    const auto a = random_vector(2, 1, rng);
    const auto c = canonicalize(a);
    for (const char* lab : {"1+", "1-", "2-"}) CHECK(std::abs(c.coeffs[lab]) < 1e-6 * a.coeffs.norm());
    CHECK(c.coeffs.coeffs.norm() == doctest::Approx(a.coeffs.norm()));

    CoeffVector z = CoeffVector::zero(4, 1);
    z["0"] = 2;
    const auto cz = canonicalize(z);
    CHECK((cz.coeffs.coeffs - z.coeffs).norm() < 1e-9);
    CHECK((cz.rotation - Eigen::Matrix3d::Identity()).norm() < 1e-6);

    const auto b = random_vector(3, 1, rng);
    const auto cb = canonicalize(b);
    for (const char* lab : {"1+", "1-", "2-"}) CHECK(std::abs(cb.coeffs[lab]) < 1e-6 * b.coeffs.norm());

    CHECK_THROWS_AS(canonicalize(CoeffVector::zero(2, 1)), ZeroVectorError);
}

TEST_CASE("l = 2 diagonalisation")
{
    CoeffVector z = CoeffVector::zero(2, 1);
    z["0"] = 1;
    const auto d = diagonalize_l2(z);
    CHECK(d.degenerate);
    CHECK(d.eigenvalues(0) == doctest::Approx(d.eigenvalues(1)));
    CHECK(d.eigenvalues(2) / d.eigenvalues(0) == doctest::Approx(-2.0));

    std::mt19937_64 rng(9);
    for (int k = 0; k < 20; ++k) {
        const auto a = random_vector(2, 1, rng);
        const auto r = diagonalize_l2(a);
        CHECK_FALSE(r.degenerate);
        for (const char* lab : {"1+", "1-", "2-"}) CHECK(std::abs(r.rotated[lab]) < 1e-9);
        CHECK(r.rotated.coeffs.norm() == doctest::Approx(a.coeffs.norm()));
    }
}

TEST_CASE("representation vectors")
{
    const auto d3 = verify_rep_vectors(g("D3"), Irrep::so3(4), 10);
    CHECK(d3.passed == 10);
    CHECK(d3.failures.empty());
    const auto cv = verify_rep_vectors(g("Cinfv"), Irrep::o3(1, -1), 5);
    CHECK(cv.passed == 5);
    const auto td = verify_rep_vectors(g("Td"), Irrep::o3(3, -1), 5);
    CHECK(td.passed == 5);
    CHECK(td.labels.empty());
}

TEST_CASE("coefficient JSON")
{
    const auto a = parse_coeff_json(R"({"l": 2, "parity": "-", "coeffs": {"0": 1.5, "2+": -2}})");
    CHECK(a.l == 2);
    CHECK(a.parity == -1);
    CHECK(a["0"] == 1.5);
    CHECK(a["2+"] == -2.0);
    const auto b = parse_coeff_json(to_json(a));
    CHECK((b.coeffs - a.coeffs).norm() == 0.0);
    CHECK(b.parity == -1);
    CHECK_THROWS_AS(parse_coeff_json("{"), ParseError);
    CHECK_THROWS_AS(parse_coeff_json(R"({"parity": "+"})"), ParseError);
    CHECK_THROWS_AS(parse_coeff_json(R"({"l": 2, "parity": "x"})"), ParseError);
    CHECK_THROWS_AS(parse_coeff_json(R"({"l": 2, "coeffs": {"3+": 1}})"), ParseError);
    CHECK_THROWS_AS(parse_coeff_json(R"({"l": 2, "coeffs": {"0": "a"}})"), ParseError);
}
