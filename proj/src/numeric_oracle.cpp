#include "o3lg/numeric_oracle.hpp"

#include "o3lg/errors.hpp"

#include <json.hpp>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <regex>

namespace o3lg {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------- harmonics

struct Quadrature {
    std::vector<Eigen::Vector3d> points;
    Eigen::VectorXd weights;
    Eigen::MatrixXd z;  // points x (2l+1)
};

// P_n and P_{n-1} at t by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double t)
{
    double p0 = 1.0, p1 = t;
    if (n == 0) return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

// Gauss-Legendre nodes in cos(theta) times equispaced azimuths: exact for
// products of two rank-l harmonics.
Quadrature make_quadrature(int l)
{
    const int n = l + 1;
    const int nphi = 2 * l + 2;
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [pn, pm] = legendre_pair(n, t);
            const double dp = n * (t * pn - pm) / (t * t - 1.0);
            const double dt = pn / dp;
            t -= dt;
            if (std::abs(dt) < 1e-16) break;
        }
        const auto [pn, pm] = legendre_pair(n, t);
        const double dp = n * (t * pn - pm) / (t * t - 1.0);
        x[i] = t;
        w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
    Quadrature q;
    q.weights.resize(n * nphi);
    int p = 0;
    for (int i = 0; i < n; ++i) {
        const double s = std::sqrt(std::max(0.0, 1.0 - x[i] * x[i]));
        for (int j = 0; j < nphi; ++j) {
            const double ph = 2 * kPi * j / nphi;
            q.points.emplace_back(s * std::cos(ph), s * std::sin(ph), x[i]);
            q.weights(p++) = w[i] * 2 * kPi / nphi;
        }
    }
    q.z.resize(q.points.size(), 2 * l + 1);
    for (std::size_t i = 0; i < q.points.size(); ++i) q.z.row(i) = tesseral_all(l, q.points[i]);
    return q;
}

const Quadrature& quadrature(int l)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Quadrature>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[l];
    if (!slot) slot = std::make_unique<Quadrature>(make_quadrature(l));
    return *slot;
}

Eigen::MatrixXd proper_matrix(int l, const Eigen::Matrix3d& r)
{
    const Quadrature& q = quadrature(l);
    Eigen::MatrixXd zr(q.points.size(), 2 * l + 1);
    const Eigen::Matrix3d rt = r.transpose();
    for (std::size_t i = 0; i < q.points.size(); ++i) zr.row(i) = tesseral_all(l, rt * q.points[i]);
    return q.z.transpose() * q.weights.asDiagonal() * zr;
}

// ---------------------------------------------------------------- detection grid

struct Grid {
    std::vector<Eigen::Vector3d> axes;
    std::vector<std::array<int, 6>> nbr;
};

const Grid& fibonacci_grid(int npts)
{
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Grid>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[npts];
    if (slot) return *slot;
    auto g = std::make_unique<Grid>();
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < npts; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / npts;
        const double s = std::sqrt(1.0 - z * z);
        g->axes.emplace_back(s * std::cos(golden * i), s * std::sin(golden * i), z);
    }
    g->nbr.resize(npts);
    std::vector<std::pair<double, int>> d(npts);
    for (int i = 0; i < npts; ++i) {
        for (int j = 0; j < npts; ++j) d[j] = {(g->axes[i] - g->axes[j]).squaredNorm(), j};
        std::partial_sort(d.begin(), d.begin() + 7, d.end());
        for (int k = 0; k < 6; ++k) g->nbr[i][k] = d[k + 1].second;
    }
    slot = std::move(g);
    return *slot;
}

// Functor shape expected by Eigen's NumericalDiff / LevenbergMarquardt.
struct LmFunctor {
    using Scalar = double;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;

    int n_in, n_out;
    LmFunctor(int in, int out) : n_in(in), n_out(out) {}
    int inputs() const { return n_in; }
    int values() const { return n_out; }
};

bool prime_power(int k)
{
    int p = 2;
    while (k % p != 0) ++p;
    while (k % p == 0) k /= p;
    return k == 1;
}

// Rotation orders worth searching at rank l.  A proper symmetry of order
// k > l forces full axial symmetry, and one with D a = -a needs k even and
// k/2 <= l.  Orders that are not prime powers follow by closure for s = +1.
bool searched_order(int l, int k, int s)
{
    if (k == 2 * l + 1) return s > 0;
    if (s > 0) return k <= l && prime_power(k);
    return k % 2 == 0 && k <= 2 * l;
}

// D(R(axis_i, 2 pi / k)) on the grid for the searched orders.
struct GridMatrices {
    std::vector<std::vector<Eigen::MatrixXd>> d;  // d[k][i]
};

constexpr int kGridCacheMaxL = 7;

const GridMatrices& grid_matrices(int l, int npts)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<GridMatrices>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{l, npts}];
    if (slot) return *slot;
    const Grid& g = fibonacci_grid(npts);
    auto m = std::make_unique<GridMatrices>();
    m->d.resize(2 * l + 2);
    for (int k = 2; k <= 2 * l + 1; ++k) {
        if (!searched_order(l, k, 1) && !searched_order(l, k, -1)) continue;
        m->d[k].reserve(npts);
        for (const auto& ax : g.axes) m->d[k].push_back(proper_matrix(l, rotation(ax, 2 * kPi / k)));
    }
    slot = std::move(m);
    return *slot;
}

double relative_residual(const Eigen::MatrixXd& d, const Eigen::VectorXd& b, int s)
{
    return (d * b - s * b).norm();
}

// Axis refinement for "R(n, 2 pi / k) b = s b" in tangent coordinates.
struct AxisFunctor : LmFunctor {
    int l, k, s;
    Eigen::VectorXd b;
    Eigen::Vector3d n0, t1, t2;

    AxisFunctor(int l_, int k_, int s_, const Eigen::VectorXd& b_, const Eigen::Vector3d& n)
        : LmFunctor(2, static_cast<int>(b_.size())), l(l_), k(k_), s(s_), b(b_), n0(n)
    {
        t1 = n.unitOrthogonal();
        t2 = n.cross(t1);
    }
    Eigen::Vector3d axis(const Eigen::VectorXd& x) const { return (n0 + x(0) * t1 + x(1) * t2).normalized(); }
    int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const
    {
        f = proper_matrix(l, rotation(axis(x), 2 * kPi / k)) * b - s * b;
        return 0;
    }
};

struct FoundAxis {
    Eigen::Vector3d axis;
    int k;
    int s;
    double residual;
};

std::optional<FoundAxis> refine_axis(int l, int k, int s, const Eigen::VectorXd& b, const Eigen::Vector3d& n)
{
    if (b.size() < 2) return std::nullopt;
    AxisFunctor f(l, k, s, b, n);
    Eigen::NumericalDiff<AxisFunctor> nd(f);
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<AxisFunctor>> lm(nd);
    lm.parameters.maxfev = 30;
    lm.parameters.xtol = 1e-15;
    lm.parameters.ftol = 1e-15;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(2);
    lm.minimize(x);
    Eigen::VectorXd r;
    f(x, r);
    return FoundAxis{f.axis(x), k, s, r.norm()};
}

std::vector<FoundAxis> search_axes(int l, int k, int s, const Eigen::VectorXd& b, int npts,
                                   double accept)
{
    const Grid& g = fibonacci_grid(npts);
    std::vector<double> res(npts);
    if (l <= kGridCacheMaxL) {
        const auto& gm = grid_matrices(l, npts);
        for (int i = 0; i < npts; ++i) res[i] = relative_residual(gm.d[k][i], b, s);
    } else {
        for (int i = 0; i < npts; ++i)
            res[i] = relative_residual(proper_matrix(l, rotation(g.axes[i], 2 * kPi / k)), b, s);
    }
    std::vector<std::pair<double, int>> minima;
    const double thresh = std::min(1.5, 0.25 * (l + 1));
    for (int i = 0; i < npts; ++i) {
        if (res[i] > thresh) continue;
        bool is_min = true;
        for (int j : g.nbr[i])
            if (res[j] < res[i]) { is_min = false; break; }
        if (is_min) minima.push_back({res[i], i});
    }
    std::sort(minima.begin(), minima.end());
    if (minima.size() > 16) minima.resize(16);

    std::vector<FoundAxis> found;
    for (const auto& [r0, i] : minima) {
        bool dup = false;
        for (const auto& f : found)
            if (std::abs(std::abs(f.axis.dot(g.axes[i])) - 1.0) < 1e-4) dup = true;
        if (dup) continue;
        auto fa = r0 < accept ? std::optional<FoundAxis>(FoundAxis{g.axes[i], k, s, r0})
                              : refine_axis(l, k, s, b, g.axes[i]);
        if (fa && fa->residual < accept) {
            bool dup2 = false;
            for (const auto& f : found)
                if (std::abs(std::abs(f.axis.dot(fa->axis)) - 1.0) < 1e-8) dup2 = true;
            if (!dup2) found.push_back(*fa);
        }
    }
    return found;
}

Eigen::Matrix3d z_to(const Eigen::Vector3d& n)
{
    const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
    const Eigen::Vector3d c = z.cross(n);
    if (c.norm() < 1e-12) return n.z() > 0 ? Eigen::Matrix3d::Identity() : rotation(Eigen::Vector3d::UnitX(), kPi);
    return rotation(c, std::atan2(c.norm(), z.dot(n)));
}

ProperGroup classify_proper(const std::vector<Eigen::Matrix3d>& els)
{
    const int n = static_cast<int>(els.size());
    if (n == 1) return {ProperFamily::C, 1};
    std::optional<Eigen::Vector3d> first;
    bool collinear = true;
    int thirds = 0;
    for (const auto& m : els) {
        const GroupElement e = GroupElement::from_matrix(m);
        if (e.angle < 1e-6) continue;
        if (std::abs(e.angle - 2 * kPi / 3) < 1e-6) ++thirds;
        if (!first) first = e.axis;
        else if (e.axis.cross(*first).norm() > 1e-6) collinear = false;
    }
    if (collinear) return {ProperFamily::C, n};
    if (thirds >= 8) {
        if (n == 12) return {ProperFamily::T, 1};
        if (n == 24) return {ProperFamily::O, 1};
        if (n == 60) return {ProperFamily::Y, 1};
    }
    if (n % 2 != 0) throw ConsistencyError("element set is not a point group");
    return {ProperFamily::D, n / 2};
}

ProperGroup normal_form(ProperGroup p)
{
    if (p.f != ProperFamily::C && p.f != ProperFamily::D) p.n = 0;
    return p;
}

std::vector<Eigen::Matrix3d> witness_generators(const GroupId& h, int l)
{
    if (is_finite(h)) return generators(h);
    const Structure s = structure(h);
    const double w = 2 * kPi / (2 * l + 1);
    std::vector<Eigen::Matrix3d> gens;
    switch (s.R.f) {
    case ProperFamily::Cinf:
        gens.push_back(rotation(Eigen::Vector3d::UnitZ(), w));
        break;
    case ProperFamily::Dinf:
        gens.push_back(rotation(Eigen::Vector3d::UnitZ(), w));
        gens.push_back(rotation(Eigen::Vector3d::UnitX(), kPi));
        break;
    default:
        // Two generic rotations generate a dense subgroup of SO(3).
        gens.push_back(rotation(Eigen::Vector3d::UnitZ(), 1.0));
        gens.push_back(rotation(Eigen::Vector3d::UnitX(), 1.0));
        break;
    }
    if (s.kind == Kind::Inversion) gens.push_back(-Eigen::Matrix3d::Identity());
    if (s.kind == Kind::Twisted) gens.push_back(-rotation(Eigen::Vector3d::UnitY(), kPi));
    return gens;
}

int irrep_parity(const GroupId& h, const Irrep& irrep)
{
    if (irrep.axial != AxialType::None) throw DomainError("projector covers SO3/O3 irreps only");
    if (irrep.parent.family == Family::SO3) {
        if (!is_proper(h)) throw DomainError(h.label() + " is not a subgroup of SO3");
        return 1;
    }
    return irrep.parity;
}

} // namespace

// ---------------------------------------------------------------- coefficients

CoeffVector CoeffVector::zero(int l, int parity)
{
    return {l, parity, Eigen::VectorXd::Zero(2 * l + 1)};
}

int coeff_index(const std::string& label, int l)
{
    static const std::regex re(R"(^(\d{1,3})([+-]?)$)");
    std::smatch m;
    if (!std::regex_match(label, m, re)) throw ParseError("bad tesseral label '" + label + "'");
    const int mm = std::stoi(m[1]);
    const std::string sg = m[2];
    if (mm > l) throw ParseError("label '" + label + "' exceeds l = " + std::to_string(l));
    if (mm == 0) {
        if (!sg.empty()) throw ParseError("label '0' takes no sign");
        return 0;
    }
    if (sg.empty()) throw ParseError("label '" + label + "' needs a sign");
    return sg == "+" ? 2 * mm - 1 : 2 * mm;
}

std::string coeff_label(int index)
{
    if (index == 0) return "0";
    return std::to_string((index + 1) / 2) + (index % 2 ? "+" : "-");
}

double& CoeffVector::operator[](const std::string& label) { return coeffs(coeff_index(label, l)); }

double CoeffVector::operator[](const std::string& label) const { return coeffs(coeff_index(label, l)); }

CoeffVector parse_coeff_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("l") || !j["l"].is_number_integer())
        throw ParseError("coefficient vector needs an integer 'l'");
    const int l = j["l"].get<int>();
    if (l < 0 || l > 40) throw ParseError("l out of range");
    int parity = 1;
    if (j.contains("parity")) {
        const auto& p = j["parity"];
        if (p == "+") parity = 1;
        else if (p == "-") parity = -1;
        else throw ParseError("parity must be \"+\" or \"-\"");
    }
    CoeffVector a = CoeffVector::zero(l, parity);
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_object()) throw ParseError("'coeffs' must be an object");
        for (const auto& [k, v] : j["coeffs"].items()) {
            if (!v.is_number()) throw ParseError("coefficient '" + k + "' is not a number");
            a[k] = v.get<double>();
        }
    }
    return a;
}

std::string to_json(const CoeffVector& a)
{
    nlohmann::ordered_json j;
    j["l"] = a.l;
    j["parity"] = a.parity > 0 ? "+" : "-";
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (int i = 0; i < a.coeffs.size(); ++i) c[coeff_label(i)] = a.coeffs(i);
    j["coeffs"] = c;
    return j.dump();
}

// ---------------------------------------------------------------- harmonics

Eigen::VectorXd tesseral_all(int l, const Eigen::Vector3d& r)
{
    const Eigen::Vector3d u = r.normalized();
    const double z = std::clamp(u.z(), -1.0, 1.0);
    const double s = std::hypot(u.x(), u.y());
    const double phi = std::atan2(u.y(), u.x());
    Eigen::VectorXd out(2 * l + 1);
    double qmm = 1.0 / std::sqrt(4 * kPi);
    for (int m = 0; m <= l; ++m) {
        if (m > 0) qmm *= std::sqrt((2.0 * m + 1) / (2.0 * m)) * s;
        double q_prev = qmm, q = qmm;
        if (l > m) {
            q = z * std::sqrt(2.0 * m + 3) * qmm;
            for (int k = m + 2; k <= l; ++k) {
                const double a = std::sqrt((4.0 * k * k - 1) / (1.0 * k * k - 1.0 * m * m));
                const double bb = std::sqrt(((k - 1.0) * (k - 1.0) - 1.0 * m * m) / (4.0 * (k - 1.0) * (k - 1.0) - 1));
                const double next = a * (z * q - bb * q_prev);
                q_prev = q;
                q = next;
            }
        }
        if (m == 0) {
            out(0) = q;
        } else {
            out(2 * m - 1) = std::sqrt(2.0) * q * std::cos(m * phi);
            out(2 * m) = std::sqrt(2.0) * q * std::sin(m * phi);
        }
    }
    return out;
}

double tesseral_eval(int l, const std::string& label, double theta, double phi)
{
    const Eigen::Vector3d r(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta));
    return tesseral_all(l, r)(coeff_index(label, l));
}

double eval(const CoeffVector& a, const Eigen::Vector3d& r) { return a.coeffs.dot(tesseral_all(a.l, r)); }

Eigen::MatrixXd rotation_matrix(int l, int parity, const Eigen::Matrix3d& g)
{
    if (g.determinant() > 0) return proper_matrix(l, g);
    if (parity != 1 && parity != -1) throw DomainError("improper element needs a parity");
    return parity * proper_matrix(l, -g);
}

Eigen::MatrixXd rotation_matrix(int l, int parity, const GroupElement& e)
{
    return rotation_matrix(l, parity, e.matrix());
}

// ---------------------------------------------------------------- projectors

Eigen::MatrixXd projector(const GroupId& h, const Irrep& irrep)
{
    const int l = irrep.l;
    const int parity = irrep_parity(h, irrep);
    const int dim = 2 * l + 1;
    if (is_finite(h)) {
        Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
        const auto els = element_matrices(h);
        for (const auto& g : els) p += rotation_matrix(l, parity, g);
        return p / static_cast<double>(els.size());
    }
    const auto gens = witness_generators(h, l);
    Eigen::MatrixXd stack(dim * gens.size(), dim);
    for (std::size_t i = 0; i < gens.size(); ++i)
        stack.block(i * dim, 0, dim, dim) = rotation_matrix(l, parity, gens[i]) - Eigen::MatrixXd::Identity(dim, dim);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (i >= sv.size() || sv(i) < 1e-8) {
            const Eigen::VectorXd v = svd.matrixV().col(i);
            p += v * v.transpose();
        }
    }
    return p;
}

int projector_rank(const GroupId& h, const Irrep& irrep)
{
    const Eigen::MatrixXd p = projector(h, irrep);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(p);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-8) ++rank;
    const int expect = is_finite(h) ? subduce_trace(h, irrep).c : subduce_continuous(h, irrep).c;
    if (rank != expect)
        throw ConsistencyError("projector rank " + std::to_string(rank) + " != trace frequency " +
                               std::to_string(expect) + " for (" + h.label() + ", " + irrep.label() + ")");
    return rank;
}

std::vector<CoeffVector> invariant_basis(const GroupId& h, const Irrep& irrep)
{
    const Eigen::MatrixXd p = projector(h, irrep);
    const int dim = static_cast<int>(p.rows());
    const int parity = irrep.parent.family == Family::SO3 ? 1 : irrep.parity;
    std::vector<Eigen::VectorXd> basis;
    // Gram-Schmidt over the projected unit vectors, in label order.
    for (int i = 0; i < dim; ++i) {
        Eigen::VectorXd v = p.col(i);
        for (const auto& b : basis) v -= b.dot(v) * b;
        if (v.norm() < 1e-6) continue;
        v.normalize();
        if (v(i) < 0) v = -v;
        basis.push_back(v);
    }
    std::vector<CoeffVector> out;
    for (const auto& b : basis) {
        Eigen::VectorXd c = b;
        for (int i = 0; i < c.size(); ++i)
            if (std::abs(c(i)) < 1e-13) c(i) = 0.0;
        out.push_back({irrep.l, parity, c});
    }
    return out;
}

// ---------------------------------------------------------------- classification

GroupId classify_elements(const std::vector<Eigen::Matrix3d>& els)
{
    std::vector<Eigen::Matrix3d> proper, k;
    bool improper = false, inversion = false;
    for (const auto& g : els) {
        if (g.determinant() > 0) {
            proper.push_back(g);
            k.push_back(g);
        } else {
            improper = true;
            if ((g + Eigen::Matrix3d::Identity()).norm() < 1e-6) inversion = true;
            k.push_back(-g);
        }
    }
    const ProperGroup r = normal_form(classify_proper(proper));
    if (!improper) return from_structure({Kind::Proper, r, r});
    if (inversion) return from_structure({Kind::Inversion, r, r});
    const ProperGroup kk = normal_form(classify_proper(k));
    return from_structure({Kind::Twisted, kk, r});
}

std::vector<Eigen::Matrix3d> stabilizer(const std::vector<Eigen::Matrix3d>& ambient, const CoeffVector& a,
                                        double tol)
{
    const double n = a.coeffs.norm();
    if (n == 0.0) throw ZeroVectorError("zero coefficient vector");
    std::vector<Eigen::Matrix3d> out;
    for (const auto& g : ambient)
        if ((rotation_matrix(a.l, a.parity, g) * a.coeffs - a.coeffs).norm() / n < tol) out.push_back(g);
    return out;
}

SymmetryReport detect_symmetry(const CoeffVector& a, const DetectOptions& opt)
{
    const double norm = a.coeffs.norm();
    if (!(norm > 0.0)) throw ZeroVectorError("zero coefficient vector");
    if (a.coeffs.size() != 2 * a.l + 1) throw ParseError("coefficient vector has wrong length");
    const int l = a.l;
    const int parity = opt.use_parity ? a.parity : 0;
    const Eigen::VectorXd b = a.coeffs / norm;
    SymmetryReport rep;

    auto witness = [&](const Eigen::Matrix3d& g) {
        const int p = parity == 0 ? 1 : parity;
        const double r = (rotation_matrix(l, p, g) * b - b).norm();
        if (r >= opt.tol && r < 10 * opt.tol)
            rep.warnings.push_back("element residual " + std::to_string(r) + " is near the tolerance");
        rep.witnesses.push_back({GroupElement::from_matrix(g), r});
    };

    if (l == 0) {
        rep.group = parity > 0 ? GroupId{Family::O3, 0} : GroupId{Family::SO3, 0};
        witness(Eigen::Matrix3d::Identity());
        if (parity > 0) witness(-Eigen::Matrix3d::Identity());
        return rep;
    }

    // Continuous axis: invariance under a rotation of order 2l+1.
    const auto cinf = search_axes(l, 2 * l + 1, 1, b, opt.grid, opt.tol);
    if (!cinf.empty()) {
        const Eigen::Vector3d n = cinf.front().axis;
        const bool even = l % 2 == 0;
        Family f;
        if (parity > 0) f = even ? Family::Dinfh : Family::Cinfh;
        else if (parity < 0) f = even ? Family::Dinf : Family::Cinfv;
        else f = even ? Family::Dinf : Family::Cinf;
        rep.group = {f, 0};
        rep.orientation = z_to(n);
        for (const auto& g : witness_generators(rep.group, l))
            witness(rep.orientation * g * rep.orientation.transpose());
        return rep;
    }

    std::vector<Eigen::Matrix3d> gens;
    for (int k = 2; k <= 2 * l; ++k) {
        for (int s : {1, -1}) {
            if (s < 0 && parity >= 0) continue;
            if (!searched_order(l, k, s)) continue;
            for (const auto& fa : search_axes(l, k, s, b, opt.grid, opt.tol)) {
                const Eigen::Matrix3d m = rotation(fa.axis, 2 * kPi / k);
                gens.push_back(s > 0 ? m : Eigen::Matrix3d(-m));
            }
        }
    }
    std::vector<Eigen::Matrix3d> els;
    try {
        // Closure over signed rotations; the sign rides along in the determinant.
        els = closure(gens, 1e-6, 240);
    } catch (const DomainError&) {
        rep.warnings.push_back("element closure exceeded the cap; reporting generators only");
        els = gens;
        els.push_back(Eigen::Matrix3d::Identity());
    }
    if (parity > 0) {
        const std::size_t n = els.size();
        for (std::size_t i = 0; i < n; ++i) els.push_back(-els[i]);
    }
    std::vector<Eigen::Matrix3d> kept;
    for (const auto& g : els) {
        const int p = parity == 0 ? 1 : parity;
        const double r = (rotation_matrix(l, p, g) * b - b).norm();
        if (r < 10 * opt.tol) kept.push_back(g);
        else rep.warnings.push_back("closure produced a non-symmetry; dropped");
    }
    rep.group = classify_elements(kept);
    if (auto q = find_conjugation(generators(rep.group), kept)) rep.orientation = *q;
    else rep.warnings.push_back("no orientation found for " + rep.group.label());
    for (const auto& g : kept) witness(g);
    return rep;
}

// ---------------------------------------------------------------- canonical forms

namespace {

Eigen::Matrix3d euler(double al, double be, double ga)
{
    return rotation(Eigen::Vector3d::UnitZ(), al) * rotation(Eigen::Vector3d::UnitY(), be) *
           rotation(Eigen::Vector3d::UnitZ(), ga);
}

struct EulerFunctor : LmFunctor {
    const CoeffVector* a;
    std::vector<int> idx;

    EulerFunctor(const CoeffVector& a_, std::vector<int> idx_)
        : LmFunctor(3, 3), a(&a_), idx(std::move(idx_))
    {
    }
    int operator()(const Eigen::VectorXd& x, Eigen::VectorXd& f) const
    {
        const Eigen::VectorXd c = proper_matrix(a->l, euler(x(0), x(1), x(2))) * a->coeffs;
        f = Eigen::VectorXd::Zero(3);
        for (std::size_t i = 0; i < idx.size(); ++i) f(i) = c(idx[i]);
        return 0;
    }
};

} // namespace

Canonical canonicalize(const CoeffVector& a, const std::string& target, int starts, std::uint64_t seed)
{
    if (a.l < 1) throw DomainError("canonicalize needs l >= 1");
    const double norm = a.coeffs.norm();
    if (!(norm > 0.0)) throw ZeroVectorError("zero coefficient vector");
    std::vector<int> idx{1, 2};
    if (a.l >= 2) {
        const int t = coeff_index(target, a.l);
        if (t <= 2) throw DomainError("target must be a label other than 0, 1+, 1-");
        idx.push_back(t);
    }
    CoeffVector unit{a.l, a.parity, a.coeffs / norm};
    EulerFunctor f(unit, idx);
    Eigen::NumericalDiff<EulerFunctor> nd(f);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);

    Canonical best;
    best.residual = std::numeric_limits<double>::infinity();
    for (int s = 0; s < starts; ++s) {
        Eigen::VectorXd x(3);
        if (s == 0) x.setZero();
        else x << ang(rng), std::acos(1.0 - 2.0 * ang(rng) / (2 * kPi)), ang(rng);
        Eigen::LevenbergMarquardt<Eigen::NumericalDiff<EulerFunctor>> lm(nd);
        lm.parameters.maxfev = 400;
        lm.parameters.xtol = 1e-15;
        lm.parameters.ftol = 1e-15;
        lm.minimize(x);
        Eigen::VectorXd r;
        f(x, r);
        if (r.norm() < best.residual) {
            best.residual = r.norm();
            best.rotation = euler(x(0), x(1), x(2));
        }
        if (best.residual < 1e-12) break;
    }
    if (best.residual > 1e-8)
        throw DomainError("canonicalize: no root found after " + std::to_string(starts) +
                          " starts; best residual " + std::to_string(best.residual));
    best.coeffs = {a.l, a.parity, proper_matrix(a.l, best.rotation) * a.coeffs};
    for (int i : idx) best.coeffs.coeffs(i) = 0.0;
    return best;
}

Eigen::Matrix3d l2_matrix(const CoeffVector& a)
{
    if (a.l != 2) throw DomainError("l2_matrix needs l = 2");
    const double n0 = 0.25 * std::sqrt(5.0 / kPi);
    const double n1 = 0.5 * std::sqrt(15.0 / kPi);
    const double n2 = 0.25 * std::sqrt(15.0 / kPi);
    const double A = a["0"] * n0, e = a["2+"] * n2;
    const double b = a["2-"] * n1 / 2, c = a["1-"] * n1 / 2, d = a["1+"] * n1 / 2;
    Eigen::Matrix3d m;
    m << e - A, b, d,
         b, -e - A, c,
         d, c, 2 * A;
    return m;
}

L2Diagonal diagonalize_l2(const CoeffVector& a)
{
    const Eigen::Matrix3d m = l2_matrix(a);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m);
    Eigen::Matrix3d v = es.eigenvectors();
    if (v.determinant() < 0) v.col(0) = -v.col(0);
    L2Diagonal out;
    out.rotation = v.transpose();
    out.eigenvalues = es.eigenvalues();
    out.rotated = {2, a.parity, proper_matrix(2, out.rotation) * a.coeffs};
    const auto& ev = out.eigenvalues;
    out.degenerate = std::abs(ev(1) - ev(0)) < 1e-8 || std::abs(ev(2) - ev(1)) < 1e-8;
    return out;
}

RepVectorReport verify_rep_vectors(const GroupId& h, const Irrep& irrep, int trials, std::uint64_t seed)
{
    RepVectorReport rep;
    rep.group = h;
    rep.irrep = irrep.label();
    rep.trials = trials;
    const bool so3 = irrep.parent.family == Family::SO3;
    const int parity = so3 ? 1 : irrep.parity;
    std::vector<Eigen::VectorXd> span;
    try {
        rep.labels = expand_labels(rep_vectors(h, irrep));
        for (const auto& s : rep.labels) {
            Eigen::VectorXd e = Eigen::VectorXd::Zero(2 * irrep.l + 1);
            e(coeff_index(s, irrep.l)) = 1.0;
            span.push_back(e);
        }
    } catch (const DomainError&) {
        for (const auto& c : invariant_basis(h, irrep)) span.push_back(c.coeffs);
    }
    if (span.empty()) throw DomainError(h.label() + " has no invariant vector in " + irrep.label());
    DetectOptions opt;
    opt.use_parity = !so3;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(t);
        std::mt19937_64 rng(s);
        std::normal_distribution<double> nd;
        CoeffVector a = CoeffVector::zero(irrep.l, parity);
        for (const auto& e : span) a.coeffs += nd(rng) * e;
        const GroupId g = detect_symmetry(a, opt).group;
        if (g == h) ++rep.passed;
        else rep.failures.push_back({s, g});
    }
    return rep;
}

} // namespace o3lg
