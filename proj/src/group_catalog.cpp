#include "o3lg/group_catalog.hpp"

#include "o3lg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <regex>
#include <tuple>

namespace o3lg {

namespace {

constexpr double kPi = std::numbers::pi;

// Azimuth of the 5-fold axes adjacent to z.  Of the two orientations with a
// 2-fold axis along y, this one gives the l = 6 invariant the form
// (sqrt(11) Z0 - sqrt(14) Z5+)/5.
constexpr double kIcosaPhi = kPi / 5;

bool parameterised(Family f)
{
    switch (f) {
    case Family::Cn: case Family::Cnh: case Family::Cnv: case Family::S2n:
    case Family::Dn: case Family::Dnh: case Family::Dnd:
        return true;
    default:
        return false;
    }
}

Eigen::Matrix3d rz(double a) { return rotation(Eigen::Vector3d::UnitZ(), a); }

Eigen::Vector3d planar(double phi) { return {std::cos(phi), std::sin(phi), 0.0}; }

std::vector<Eigen::Matrix3d> proper_generators(const ProperGroup& p)
{
    using V = Eigen::Vector3d;
    switch (p.f) {
    case ProperFamily::C:
        if (p.n == 1) return {};
        return {rz(2 * kPi / p.n)};
    case ProperFamily::D:
        return {rz(2 * kPi / p.n), rotation(V::UnitX(), kPi)};
    case ProperFamily::T:
        return {rotation(V::UnitZ(), kPi), rotation(V::UnitX(), kPi),
                rotation(V(1, 1, 1), 2 * kPi / 3)};
    case ProperFamily::O:
        return {rotation(V::UnitZ(), kPi / 2), rotation(V::UnitX(), kPi / 2)};
    case ProperFamily::Y: {
        const double th = std::atan(2.0);
        V ax(std::sin(th) * std::cos(kIcosaPhi), std::sin(th) * std::sin(kIcosaPhi), std::cos(th));
        return {rz(2 * kPi / 5), rotation(V::UnitY(), kPi), rotation(ax, 2 * kPi / 5)};
    }
    default:
        throw DomainError("no finite generator set for a Lie group; use analytic path");
    }
}

// An element of K \ R whose negative completes the twisted group.
Eigen::Matrix3d twist_element(const Structure& s)
{
    const auto& K = s.K;
    const auto& R = s.R;
    if (K.f == ProperFamily::C) return rz(2 * kPi / K.n);                        // C2N over CN
    if (K.f == ProperFamily::D && R.f == ProperFamily::C)
        return rotation(planar(kPi / 2), kPi);                                  // Cnv: mirror xz
    if (K.f == ProperFamily::D) return rotation(planar(kPi / K.n), kPi);        // D2N over DN
    if (K.f == ProperFamily::O) return rz(kPi / 2);                              // Td
    throw DomainError("twisted group without finite realisation");
}

long proper_order(const ProperGroup& p)
{
    switch (p.f) {
    case ProperFamily::C: return p.n;
    case ProperFamily::D: return 2L * p.n;
    case ProperFamily::T: return 12;
    case ProperFamily::O: return 24;
    case ProperFamily::Y: return 60;
    default: return -1;
    }
}

std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

} // namespace

std::string family_name(Family f)
{
    static const char* names[] = {"C1", "Ci", "Cs", "Cn", "Cnh", "Cnv", "S2n", "Dn", "Dnh", "Dnd",
                                  "T", "Td", "Th", "O", "Oh", "Y", "Yh",
                                  "Cinf", "Cinfh", "Cinfv", "Dinf", "Dinfh", "SO3", "O3"};
    return names[static_cast<int>(f)];
}

std::string GroupId::label() const
{
    const std::string ns = std::to_string(n);
    switch (family) {
    case Family::Cn: return "C" + ns;
    case Family::Cnh: return "C" + ns + "h";
    case Family::Cnv: return "C" + ns + "v";
    case Family::S2n: return n % 2 ? "C" + ns + "i" : "S" + std::to_string(2 * n);
    case Family::Dn: return "D" + ns;
    case Family::Dnh: return "D" + ns + "h";
    case Family::Dnd: return "D" + ns + "d";
    default: return family_name(family);
    }
}

GroupId make_group(Family f, int n)
{
    if (!parameterised(f)) return {f, 0};
    if (n < 1) throw ParseError("order parameter must be positive");
    if (n == 1) {
        switch (f) {
        case Family::Cn: return {Family::C1, 0};
        case Family::Cnh: case Family::Cnv: return {Family::Cs, 0};
        case Family::S2n: return {Family::Ci, 0};
        case Family::Dn: return {Family::Cn, 2};
        case Family::Dnh: return {Family::Cnv, 2};
        case Family::Dnd: return {Family::Cnh, 2};
        default: break;
        }
    }
    return {f, n};
}

GroupId canonicalize_label(std::string_view raw)
{
    const std::string s = trim(raw);
    static const std::vector<std::pair<std::string, Family>> fixed = {
        {"Ci", Family::Ci}, {"Cs", Family::Cs}, {"T", Family::T}, {"Td", Family::Td},
        {"Th", Family::Th}, {"O", Family::O}, {"Oh", Family::Oh}, {"Y", Family::Y},
        {"I", Family::Y}, {"Yh", Family::Yh}, {"Ih", Family::Yh},
        {"SO3", Family::SO3}, {"SO(3)", Family::SO3}, {"O3", Family::O3}, {"O(3)", Family::O3}};
    for (const auto& [name, f] : fixed)
        if (s == name) return {f, 0};

    static const std::regex re(R"(^([CDS])(\d+|inf|∞)([hvdi]?)$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw ParseError("unknown group label '" + s + "'");
    const char head = m[1].str()[0];
    const std::string num = m[2].str();
    const std::string suf = m[3].str();

    if (num == "inf" || num == "∞") {
        if (head == 'C' && suf.empty()) return {Family::Cinf, 0};
        if (head == 'C' && suf == "h") return {Family::Cinfh, 0};
        if (head == 'C' && suf == "v") return {Family::Cinfv, 0};
        if (head == 'D' && suf.empty()) return {Family::Dinf, 0};
        if (head == 'D' && suf == "h") return {Family::Dinfh, 0};
        throw ParseError("unknown group label '" + s + "'");
    }
    if (num.size() > 4) throw ParseError("order parameter too large in '" + s + "'");
    const int n = std::stoi(num);
    if (n < 1) throw ParseError("order parameter must be positive in '" + s + "'");

    if (head == 'C') {
        if (suf.empty()) return make_group(Family::Cn, n);
        if (suf == "h") return make_group(Family::Cnh, n);
        if (suf == "v") return make_group(Family::Cnv, n);
        if (suf == "i") return n % 2 ? make_group(Family::S2n, n) : make_group(Family::Cnh, n);
        throw ParseError("unknown group label '" + s + "'");
    }
    if (head == 'D') {
        if (suf.empty()) return make_group(Family::Dn, n);
        if (suf == "h") return make_group(Family::Dnh, n);
        if (suf == "d") return make_group(Family::Dnd, n);
        throw ParseError("unknown group label '" + s + "'");
    }
    // S_m: even m is S_{2n}; odd m generates C_mh.
    if (!suf.empty()) throw ParseError("unknown group label '" + s + "'");
    if (n % 2 == 0) return make_group(Family::S2n, n / 2);
    return make_group(Family::Cnh, n);
}

Structure structure(const GroupId& g)
{
    using P = ProperGroup;
    using F = ProperFamily;
    const int n = g.n;
    auto prop = [](P p) { return Structure{Kind::Proper, p, p}; };
    auto inv = [](P p) { return Structure{Kind::Inversion, p, p}; };
    auto tw = [](P k, P r) { return Structure{Kind::Twisted, k, r}; };
    switch (g.family) {
    case Family::C1: return prop({F::C, 1});
    case Family::Ci: return inv({F::C, 1});
    case Family::Cs: return tw({F::C, 2}, {F::C, 1});
    case Family::Cn: return prop({F::C, n});
    case Family::Cnh: return n % 2 == 0 ? inv({F::C, n}) : tw({F::C, 2 * n}, {F::C, n});
    case Family::S2n: return n % 2 == 1 ? inv({F::C, n}) : tw({F::C, 2 * n}, {F::C, n});
    case Family::Cnv: return tw({F::D, n}, {F::C, n});
    case Family::Dn: return prop({F::D, n});
    case Family::Dnh: return n % 2 == 0 ? inv({F::D, n}) : tw({F::D, 2 * n}, {F::D, n});
    case Family::Dnd: return n % 2 == 1 ? inv({F::D, n}) : tw({F::D, 2 * n}, {F::D, n});
    case Family::T: return prop({F::T, 0});
    case Family::Td: return tw({F::O, 0}, {F::T, 0});
    case Family::Th: return inv({F::T, 0});
    case Family::O: return prop({F::O, 0});
    case Family::Oh: return inv({F::O, 0});
    case Family::Y: return prop({F::Y, 0});
    case Family::Yh: return inv({F::Y, 0});
    case Family::Cinf: return prop({F::Cinf, 0});
    case Family::Cinfh: return inv({F::Cinf, 0});
    case Family::Cinfv: return tw({F::Dinf, 0}, {F::Cinf, 0});
    case Family::Dinf: return prop({F::Dinf, 0});
    case Family::Dinfh: return inv({F::Dinf, 0});
    case Family::SO3: return prop({F::SO3, 0});
    case Family::O3: return inv({F::SO3, 0});
    }
    throw DomainError("unhandled family");
}

GroupId from_structure(const Structure& s)
{
    using F = ProperFamily;
    const auto& R = s.R;
    const auto& K = s.K;
    auto proper_id = [](const ProperGroup& p) -> GroupId {
        switch (p.f) {
        case F::C: return make_group(Family::Cn, p.n);
        case F::D: return make_group(Family::Dn, p.n);
        case F::T: return {Family::T, 0};
        case F::O: return {Family::O, 0};
        case F::Y: return {Family::Y, 0};
        case F::Cinf: return {Family::Cinf, 0};
        case F::Dinf: return {Family::Dinf, 0};
        case F::SO3: return {Family::SO3, 0};
        }
        return {};
    };
    switch (s.kind) {
    case Kind::Proper:
        return proper_id(R);
    case Kind::Inversion:
        switch (R.f) {
        case F::C:
            if (R.n == 1) return {Family::Ci, 0};
            return R.n % 2 == 0 ? make_group(Family::Cnh, R.n) : make_group(Family::S2n, R.n);
        case F::D:
            return R.n % 2 == 0 ? make_group(Family::Dnh, R.n) : make_group(Family::Dnd, R.n);
        case F::T: return {Family::Th, 0};
        case F::O: return {Family::Oh, 0};
        case F::Y: return {Family::Yh, 0};
        case F::Cinf: return {Family::Cinfh, 0};
        case F::Dinf: return {Family::Dinfh, 0};
        case F::SO3: return {Family::O3, 0};
        }
        break;
    case Kind::Twisted:
        if (K.f == F::C && R.f == F::C && K.n == 2 * R.n) {
            const int n = R.n;
            if (n == 1) return {Family::Cs, 0};
            return n % 2 ? make_group(Family::Cnh, n) : make_group(Family::S2n, n);
        }
        if (K.f == F::D && R.f == F::C && K.n == R.n) return make_group(Family::Cnv, R.n);
        if (K.f == F::D && R.f == F::D && K.n == 2 * R.n) {
            const int n = R.n;
            return n % 2 ? make_group(Family::Dnh, n) : make_group(Family::Dnd, n);
        }
        if (K.f == F::O && R.f == F::T) return {Family::Td, 0};
        if (K.f == F::Dinf && R.f == F::Cinf) return {Family::Cinfv, 0};
        break;
    }
    throw DomainError("structure does not describe a subgroup of O(3)");
}

Eigen::Matrix3d rotation(const Eigen::Vector3d& axis, double angle)
{
    return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

Eigen::Matrix3d GroupElement::matrix() const
{
    Eigen::Matrix3d m = rotation(axis, angle);
    return improper ? Eigen::Matrix3d(-m) : m;
}

GroupElement GroupElement::from_matrix(const Eigen::Matrix3d& m)
{
    GroupElement e;
    e.improper = m.determinant() < 0;
    const Eigen::Matrix3d p = e.improper ? Eigen::Matrix3d(-m) : m;
    const double c = std::clamp((p.trace() - 1.0) / 2.0, -1.0, 1.0);
    e.angle = std::acos(c);
    Eigen::Vector3d w(p(2, 1) - p(1, 2), p(0, 2) - p(2, 0), p(1, 0) - p(0, 1));
    if (e.angle < 1e-12) {
        e.angle = 0.0;
        e.axis = Eigen::Vector3d::UnitZ();
    } else if (w.norm() > 1e-6) {
        e.axis = w.normalized();
    } else {
        // Half turn: axis from the symmetric part, sign fixed to be lexicographically positive.
        const Eigen::Matrix3d s = (p + Eigen::Matrix3d::Identity()) / 2.0;
        int best = 0;
        for (int j = 1; j < 3; ++j)
            if (s.col(j).norm() > s.col(best).norm()) best = j;
        Eigen::Vector3d a = s.col(best).normalized();
        for (int j = 0; j < 3; ++j) {
            if (std::abs(a(j)) > 1e-9) {
                if (a(j) < 0) a = -a;
                break;
            }
        }
        e.axis = a;
        e.angle = kPi;
    }
    return e;
}

std::vector<Eigen::Matrix3d> closure(const std::vector<Eigen::Matrix3d>& gens, double tol,
                                     std::size_t cap)
{
    std::vector<Eigen::Matrix3d> els{Eigen::Matrix3d::Identity()};
    auto known = [&](const Eigen::Matrix3d& m) {
        for (const auto& e : els)
            if ((e - m).norm() < tol) return true;
        return false;
    };
    for (std::size_t i = 0; i < els.size(); ++i) {
        for (const auto& g : gens) {
            Eigen::Matrix3d m = g * els[i];
            if (!known(m)) {
                els.push_back(m);
                if (els.size() > cap) throw DomainError("closure exceeded element cap");
            }
        }
    }
    return els;
}

bool is_finite(const GroupId& g)
{
    switch (g.family) {
    case Family::Cinf: case Family::Cinfh: case Family::Cinfv:
    case Family::Dinf: case Family::Dinfh: case Family::SO3: case Family::O3:
        return false;
    default:
        return true;
    }
}

bool is_axial_infinite(const GroupId& g)
{
    switch (g.family) {
    case Family::Cinf: case Family::Cinfh: case Family::Cinfv: case Family::Dinf: case Family::Dinfh:
        return true;
    default:
        return false;
    }
}

bool is_proper(const GroupId& g) { return structure(g).kind == Kind::Proper; }

std::vector<Eigen::Matrix3d> generators(const GroupId& g)
{
    if (!is_finite(g)) throw DomainError(g.label() + " is infinite; use analytic path");
    const Structure s = structure(g);
    std::vector<Eigen::Matrix3d> gens = proper_generators(s.R);
    if (s.kind == Kind::Inversion) gens.push_back(-Eigen::Matrix3d::Identity());
    if (s.kind == Kind::Twisted) gens.push_back(-twist_element(s));
    return gens;
}

std::vector<Eigen::Matrix3d> element_matrices(const GroupId& g)
{
    auto els = closure(generators(g));
    const auto order = group_order(g);
    if (!order || static_cast<long>(els.size()) != *order)
        throw ConsistencyError("element closure of " + g.label() + " has wrong order");
    return els;
}

std::vector<GroupElement> elements(const GroupId& g)
{
    std::vector<GroupElement> out;
    for (const auto& m : element_matrices(g)) out.push_back(GroupElement::from_matrix(m));
    return out;
}

std::optional<long> group_order(const GroupId& g)
{
    if (!is_finite(g)) return std::nullopt;
    const Structure s = structure(g);
    const long r = proper_order(s.R);
    return s.kind == Kind::Proper ? r : 2 * r;
}

GroupDims dims(const GroupId& g)
{
    GroupDims d;
    switch (g.family) {
    case Family::SO3: case Family::O3: d.lie_dim = 3; break;
    case Family::Cinf: case Family::Cinfh: case Family::Cinfv:
    case Family::Dinf: case Family::Dinfh: d.lie_dim = 1; break;
    default: d.lie_dim = 0;
    }
    switch (g.family) {
    case Family::C1: case Family::Ci: d.fbar = 3; break;
    case Family::Cn: case Family::Cnh: case Family::S2n: case Family::Cs: d.fbar = 1; break;
    default: d.fbar = 0;
    }
    return d;
}

int normaliser_dim(const GroupId& g)
{
    switch (g.family) {
    case Family::C1: case Family::Ci: case Family::SO3: case Family::O3:
        return 3;
    case Family::Cn: case Family::Cnh: case Family::S2n: case Family::Cs:
    case Family::Cinf: case Family::Cinfh: case Family::Cinfv: case Family::Dinf: case Family::Dinfh:
        return 1;
    default:
        return 0;
    }
}

bool listing_less(const GroupId& a, const GroupId& b)
{
    auto key = [](const GroupId& g) {
        const int lie = dims(g).lie_dim;
        long size = 0;
        if (auto o = group_order(g)) {
            size = *o;
        } else {
            // Component count of the Lie group.
            const Structure s = structure(g);
            size = (s.R.f == ProperFamily::Dinf ? 2 : 1) * (s.kind == Kind::Proper ? 1 : 2);
        }
        return std::make_tuple(-lie, -size);
    };
    const auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    const std::string fa = family_name(a.family), fb = family_name(b.family);
    if (fa != fb) return fa < fb;
    return a.n < b.n;
}

} // namespace o3lg

namespace o3lg {

namespace {

// Rotation taking the orthonormal frame built on (a1, a2) to the one on (b1, b2).
Eigen::Matrix3d frame_map(const Eigen::Vector3d& a1, const Eigen::Vector3d& a2,
                          const Eigen::Vector3d& b1, const Eigen::Vector3d& b2)
{
    auto frame = [](const Eigen::Vector3d& u, const Eigen::Vector3d& v) {
        Eigen::Matrix3d f;
        const Eigen::Vector3d e1 = u.normalized();
        Eigen::Vector3d e2 = v - v.dot(e1) * e1;
        if (e2.norm() < 1e-9) e2 = e1.unitOrthogonal();
        e2.normalize();
        f.col(0) = e1;
        f.col(1) = e2;
        f.col(2) = e1.cross(e2);
        return f;
    };
    return frame(b1, b2) * frame(a1, a2).transpose();
}

bool same_type(const GroupElement& a, const GroupElement& b)
{
    return a.improper == b.improper && std::abs(a.angle - b.angle) < 1e-6;
}

} // namespace

std::optional<Eigen::Matrix3d> find_conjugation(const std::vector<Eigen::Matrix3d>& h,
                                                const std::vector<Eigen::Matrix3d>& k, double tol)
{
    auto contained = [&](const Eigen::Matrix3d& q) {
        for (const auto& g : h) {
            const Eigen::Matrix3d m = q * g * q.transpose();
            bool hit = false;
            for (const auto& x : k)
                if ((x - m).norm() < tol) { hit = true; break; }
            if (!hit) return false;
        }
        return true;
    };

    std::vector<GroupElement> he;
    for (const auto& g : h) {
        GroupElement e = GroupElement::from_matrix(g);
        if (e.angle > 1e-9) he.push_back(e);
    }
    if (he.empty()) {
        const Eigen::Matrix3d id = Eigen::Matrix3d::Identity();
        return contained(id) ? std::optional<Eigen::Matrix3d>(id) : std::nullopt;
    }
    // First axis: the largest rotation angle, which has the fewest candidates.
    std::sort(he.begin(), he.end(), [](const auto& a, const auto& b) { return a.angle > b.angle; });
    const GroupElement g1 = he.front();
    std::optional<GroupElement> g2;
    for (const auto& e : he)
        if (e.axis.cross(g1.axis).norm() > 1e-6) { g2 = e; break; }

    std::vector<GroupElement> ke;
    for (const auto& x : k) ke.push_back(GroupElement::from_matrix(x));

    auto images = [](const GroupElement& src, const GroupElement& dst) {
        std::vector<Eigen::Vector3d> v{dst.axis};
        if (std::abs(src.angle - kPi) < 1e-6) v.push_back(-dst.axis);
        return v;
    };
    for (const auto& k1 : ke) {
        if (!same_type(g1, k1)) continue;
        for (const auto& b1 : images(g1, k1)) {
            if (!g2) {
                const Eigen::Matrix3d q = frame_map(g1.axis, g1.axis.unitOrthogonal(), b1, b1.unitOrthogonal());
                if (contained(q)) return q;
                continue;
            }
            const double dot = g1.axis.dot(g2->axis);
            for (const auto& k2 : ke) {
                if (!same_type(*g2, k2)) continue;
                for (const auto& b2 : images(*g2, k2)) {
                    if (std::abs(b1.dot(b2) - dot) > 1e-6) continue;
                    const Eigen::Matrix3d q = frame_map(g1.axis, g2->axis, b1, b2);
                    if (contained(q)) return q;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace o3lg
