#pragma once
// Reference implementations used only by the tests.  Each one is written
// from first principles and shares no code with the library beyond the
// element matrices it is handed.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace oracle {

// Character of the rank-l rotation irrep by direct sum over m.
inline double chi(int l, double phi)
{
    double s = 0.0;
    for (int m = -l; m <= l; ++m) s += std::cos(m * phi);
    return s;
}

// Proper angle of an orthogonal matrix, improper ones via -g.
inline double angle_of(const Eigen::Matrix3d& g)
{
    const Eigen::Matrix3d r = g.determinant() > 0 ? g : Eigen::Matrix3d(-g);
    return std::acos(std::clamp((r.trace() - 1.0) / 2.0, -1.0, 1.0));
}

// Frequency of the identity in l^parity restricted to a finite element set.
inline double frequency(const std::vector<Eigen::Matrix3d>& els, int l, int parity)
{
    double s = 0.0;
    for (const auto& g : els) s += (g.determinant() > 0 ? 1.0 : parity) * chi(l, angle_of(g));
    return s / static_cast<double>(els.size());
}

// Real tesseral harmonic from std::assoc_legendre (which omits the
// Condon-Shortley phase).  label: "0", "m+" or "m-".
inline double tesseral(int l, const std::string& label, double theta, double phi)
{
    const int m = label == "0" ? 0 : std::stoi(label.substr(0, label.size() - 1));
    const double x = std::cos(theta);
    double norm = (2.0 * l + 1.0) / (4.0 * std::numbers::pi);
    for (int k = l - m + 1; k <= l + m; ++k) norm /= k;
    norm = std::sqrt(norm);
    const double p = std::assoc_legendre(static_cast<unsigned>(l), static_cast<unsigned>(m), x);
    if (m == 0) return norm * p;
    const double ang = label.back() == '+' ? std::cos(m * phi) : std::sin(m * phi);
    return std::sqrt(2.0) * norm * p * ang;
}

inline std::vector<std::string> labels(int l)
{
    std::vector<std::string> out{"0"};
    for (int m = 1; m <= l; ++m) {
        out.push_back(std::to_string(m) + "+");
        out.push_back(std::to_string(m) + "-");
    }
    return out;
}

inline double eval(const Eigen::VectorXd& a, int l, const Eigen::Vector3d& r)
{
    const Eigen::Vector3d u = r.normalized();
    const double theta = std::acos(std::clamp(u.z(), -1.0, 1.0));
    const double phi = std::atan2(u.y(), u.x());
    const auto ls = labels(l);
    double s = 0.0;
    for (std::size_t i = 0; i < ls.size(); ++i) s += a[static_cast<Eigen::Index>(i)] * tesseral(l, ls[i], theta, phi);
    return s;
}

inline bool contains(const std::vector<Eigen::Matrix3d>& set, const Eigen::Matrix3d& g, double tol = 1e-6)
{
    for (const auto& k : set)
        if ((k - g).norm() < tol) return true;
    return false;
}

// Brute-force embedding search: every rotation Q that sends a pair of
// non-parallel rotation axes of h onto a pair of axes of k (with the same
// angle between them) is tried, and accepted when it maps all of h into k.
inline bool embeds(const std::vector<Eigen::Matrix3d>& h, const std::vector<Eigen::Matrix3d>& k)
{
    if (k.size() % h.size() != 0) return false;
    struct Ax {
        Eigen::Vector3d v;
        double angle;
        bool improper;
    };
    auto axes = [](const std::vector<Eigen::Matrix3d>& els) {
        std::vector<Ax> out;
        for (const auto& g : els) {
            const bool imp = g.determinant() < 0;
            const Eigen::Matrix3d r = imp ? Eigen::Matrix3d(-g) : g;
            const double a = angle_of(g);
            if (a < 1e-9) continue;
            Eigen::AngleAxisd aa(r);
            out.push_back({aa.axis(), a, imp});
            out.push_back({-aa.axis(), a, imp});
        }
        return out;
    };
    auto maps = [&](const Eigen::Matrix3d& q) {
        for (const auto& g : h)
            if (!contains(k, q * g * q.transpose())) return false;
        return true;
    };
    const auto ha = axes(h), ka = axes(k);
    if (ha.empty()) {
        // h is C1, Ci or has only the identity rotation part.
        return maps(Eigen::Matrix3d::Identity());
    }
    auto frame = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
        Eigen::Matrix3d f;
        const Eigen::Vector3d e1 = a.normalized();
        const Eigen::Vector3d e2 = (b - b.dot(e1) * e1).normalized();
        f << e1, e2, e1.cross(e2);
        return f;
    };
    const Ax& a1 = ha.front();
    const Ax* a2 = nullptr;
    for (const auto& x : ha)
        if (x.v.cross(a1.v).norm() > 1e-6) {
            a2 = &x;
            break;
        }
    for (const auto& b1 : ka) {
        if (b1.improper != a1.improper || std::abs(b1.angle - a1.angle) > 1e-6) continue;
        if (!a2) {
            // Every element of h acts about the one axis, so any rotation
            // carrying it onto b1 will do.
            const Eigen::Vector3d t = std::abs(a1.v.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
            const Eigen::Vector3d u = std::abs(b1.v.x()) < 0.9 ? Eigen::Vector3d::UnitX() : Eigen::Vector3d::UnitY();
            if (maps(frame(b1.v, u) * frame(a1.v, t).transpose())) return true;
            continue;
        }
        const double d = a1.v.dot(a2->v);
        for (const auto& b2 : ka) {
            if (b2.improper != a2->improper || std::abs(b2.angle - a2->angle) > 1e-6) continue;
            if (std::abs(b1.v.dot(b2.v) - d) > 1e-6) continue;
            const Eigen::Matrix3d q = frame(b1.v, b2.v) * frame(a1.v, a2->v).transpose();
            if (maps(q)) return true;
        }
    }
    return false;
}

} // namespace oracle
