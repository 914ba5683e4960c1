#include "o3lg/characters.hpp"

#include "o3lg/errors.hpp"

#include <cmath>
#include <numbers>
#include <regex>

namespace o3lg {

namespace {

constexpr double kPi = std::numbers::pi;

int fl(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

std::string sgn(int s) { return s > 0 ? "+" : "-"; }

// Parity sign of m, the reading of kappa under which the tabulated vectors
// are invariant for both parities of n.
int kappa(int m) { return m % 2 == 0 ? 1 : -1; }

std::vector<std::string> c1_vector(int l)
{
    std::vector<std::string> v{"0"};
    if (l >= 2) v.push_back("2+");
    for (int m = 3; m <= l; ++m) v.push_back(std::to_string(m) + "±");
    return v;
}

// Rotation-group rows, keyed by the proper group.
std::vector<std::string> proper_rows_vector(const ProperGroup& p, int l)
{
    std::vector<std::string> v;
    switch (p.f) {
    case ProperFamily::Dinf:
    case ProperFamily::Cinf:
    case ProperFamily::SO3:
        return {"0"};
    case ProperFamily::D:
        if (l % 2 == 0) v.push_back("0");
        for (int m = p.n; m <= l; m += p.n)
            v.push_back(std::to_string(m) + sgn(l % 2 == 0 ? kappa(m) : -kappa(m)));
        return v;
    case ProperFamily::C:
        if (p.n == 1) return c1_vector(l);
        v.push_back("0");
        for (int m = p.n; m <= l; m += p.n) v.push_back(std::to_string(m) + "+");
        return v;
    default:
        throw DomainError("representation vectors of T, O, Y are not tabulated; use invariant_basis");
    }
}

// Negative-parity rows, keyed by the group itself.
std::vector<std::string> odd_rows_vector(const GroupId& h, int l)
{
    std::vector<std::string> v;
    const int n = h.n;
    const int mu = l % 2 == 0 ? 1 : -1;
    switch (h.family) {
    case Family::Dinf:
    case Family::Cinfv:
    case Family::SO3:
        return {"0"};
    case Family::Dnd:
    case Family::Dnh:
        for (int m = n; m <= l; m += 2 * n) v.push_back(std::to_string(m) + sgn(kappa(m) * mu));
        return v;
    case Family::Dn:
        return proper_rows_vector({ProperFamily::D, n}, l);
    case Family::Cnv:
        if (l % 2 == 0) {
            for (int m = n; m <= l; m += n) v.push_back(std::to_string(m) + "-");
        } else {
            v.push_back("0");
            for (int m = n; m <= l; m += n) v.push_back(std::to_string(m) + "+");
        }
        return v;
    case Family::Cnh:
    case Family::S2n:
        v.push_back(std::to_string(n) + "+");
        for (int m = 3 * n; m <= l; m += 2 * n) v.push_back(std::to_string(m) + "±");
        return v;
    case Family::Cs:
        // Kept verbatim, including the swapped l-even/l-odd rows.
        if (l % 2 == 0) {
            v.push_back("0");
            for (int m = 2; m <= l; ++m) v.push_back(std::to_string(m) + "+");
        } else {
            for (int m = 2; m <= l; ++m) v.push_back(std::to_string(m) + "-");
        }
        return v;
    case Family::Cn:
        v.push_back("0");
        for (int m = n; m <= l; m += n) v.push_back(std::to_string(m) + "±");
        return v;
    case Family::C1:
        return c1_vector(l);
    case Family::Y: case Family::O: case Family::Td: case Family::T:
        throw DomainError("representation vectors of Y, O, Td, T are not tabulated; use invariant_basis");
    default:
        throw DomainError(h.label() + " has no tabulated vector for negative parity");
    }
}

} // namespace

int Irrep::dim() const
{
    if (axial == AxialType::None) return 2 * l + 1;
    switch (axial) {
    case AxialType::M:
        if (parent.family == Family::Cinfv) return m == 0 ? 1 : 2;
        return 1;
    case AxialType::A1: case AxialType::A2: return 1;
    case AxialType::E: return 2;
    default: return 0;
    }
}

std::string Irrep::label() const
{
    const std::string ps = parity == 0 ? "" : sgn(parity);
    switch (axial) {
    case AxialType::None: return std::to_string(l) + ps;
    case AxialType::M: return std::to_string(m) + ps;
    case AxialType::A1: return "A1" + ps;
    case AxialType::A2: return "A2" + ps;
    case AxialType::E: return "E" + std::to_string(l) + ps;
    }
    return {};
}

Irrep Irrep::so3(int l)
{
    Irrep r;
    r.parent = {Family::SO3, 0};
    r.l = l;
    return r;
}

Irrep Irrep::o3(int l, int parity)
{
    Irrep r;
    r.parent = {Family::O3, 0};
    r.l = l;
    r.parity = parity;
    return r;
}

Irrep parse_irrep(const GroupId& parent, std::string_view text)
{
    const std::string s(text);
    std::smatch mt;
    auto bad = [&]() { return ParseError("bad irrep '" + s + "' for parent " + parent.label()); };
    auto sign_of = [](const std::string& t) { return t == "+" ? 1 : -1; };
    Irrep r;
    r.parent = parent;
    switch (parent.family) {
    case Family::SO3: {
        static const std::regex re(R"(^(\d{1,3})$)");
        if (!std::regex_match(s, mt, re)) throw bad();
        r.l = std::stoi(mt[1]);
        return r;
    }
    case Family::O3: {
        static const std::regex re(R"(^(\d{1,3})([+-])$)");
        if (!std::regex_match(s, mt, re)) throw bad();
        r.l = std::stoi(mt[1]);
        r.parity = sign_of(mt[2]);
        return r;
    }
    case Family::Cinf:
    case Family::Cinfv: {
        static const std::regex re(R"(^(-?\d{1,3})$)");
        if (!std::regex_match(s, mt, re)) throw bad();
        r.axial = AxialType::M;
        r.m = std::stoi(mt[1]);
        if (parent.family == Family::Cinfv && r.m < 0) throw bad();
        r.l = std::abs(r.m);
        return r;
    }
    case Family::Cinfh: {
        static const std::regex re(R"(^(-?\d{1,3})([+-])$)");
        if (!std::regex_match(s, mt, re)) throw bad();
        r.axial = AxialType::M;
        r.m = std::stoi(mt[1]);
        r.l = std::abs(r.m);
        r.parity = sign_of(mt[2]);
        return r;
    }
    case Family::Dinf:
    case Family::Dinfh: {
        static const std::regex re(R"(^(A1|A2|E(\d{1,3}))([+-]?)$)");
        if (!std::regex_match(s, mt, re)) throw bad();
        const bool h = parent.family == Family::Dinfh;
        if (h == mt[3].str().empty()) throw bad();
        if (h) r.parity = sign_of(mt[3]);
        if (mt[1] == "A1") r.axial = AxialType::A1;
        else if (mt[1] == "A2") r.axial = AxialType::A2;
        else {
            r.axial = AxialType::E;
            r.l = std::stoi(mt[2]);
            if (r.l < 1) throw bad();
        }
        return r;
    }
    default:
        throw ParseError("irreps are only defined here for SO3, O3 and the axial groups, not " +
                         parent.label());
    }
}

double chi_rotation(int l, double phi)
{
    const double s = std::sin(phi / 2);
    if (std::abs(s) < 1e-6) {
        double sum = 1.0;
        for (int m = 1; m <= l; ++m) sum += 2 * std::cos(m * phi);
        return sum;
    }
    return std::sin((l + 0.5) * phi) / s;
}

double chi_o3(int l, int parity, const Eigen::Matrix3d& g)
{
    const bool improper = g.determinant() < 0;
    const Eigen::Matrix3d p = improper ? Eigen::Matrix3d(-g) : g;
    const double phi = std::acos(std::clamp((p.trace() - 1.0) / 2.0, -1.0, 1.0));
    const double chi = chi_rotation(l, phi);
    return improper ? parity * chi : chi;
}

double chi_o3(const Irrep& irrep, const GroupElement& e)
{
    const double chi = chi_rotation(irrep.l, e.angle);
    return e.improper ? irrep.parity * chi : chi;
}

std::string method_name(SubductionMethod m)
{
    switch (m) {
    case SubductionMethod::Trace: return "trace";
    case SubductionMethod::ClosedForm: return "closed_form";
    case SubductionMethod::AnalyticContinuous: return "analytic_continuous";
    }
    return {};
}

namespace {

void require_rotation_irrep(const Irrep& irrep)
{
    if (irrep.axial != AxialType::None)
        throw DomainError("subduction here covers SO3/O3 irreps only");
}

} // namespace

SubductionResult subduce_trace(const GroupId& h, const Irrep& irrep)
{
    require_rotation_irrep(irrep);
    if (!is_finite(h)) throw DomainError(h.label() + " is infinite; use subduce_continuous");
    const bool so3 = irrep.parent.family == Family::SO3;
    if (so3 && !is_proper(h)) throw DomainError(h.label() + " is not a subgroup of SO3");
    const auto els = element_matrices(h);
    double sum = 0.0;
    for (const auto& g : els) sum += chi_o3(irrep.l, so3 ? 1 : irrep.parity, g);
    const double avg = sum / static_cast<double>(els.size());
    const double r = std::round(avg);
    if (std::abs(avg - r) > 1e-6)
        throw ConsistencyError("non-integer trace average for (" + h.label() + ", " + irrep.label() + ")");
    return {static_cast<int>(r), SubductionMethod::Trace};
}

int proper_frequency(const ProperGroup& p, int l)
{
    switch (p.f) {
    case ProperFamily::C: return 2 * (l / p.n) + 1;
    case ProperFamily::D: return l / p.n + (l % 2 == 0 ? 1 : 0);
    case ProperFamily::T: return 2 * (l / 3) + l / 2 - l + 1;
    case ProperFamily::O: return l / 4 + l / 3 + l / 2 - l + 1;
    case ProperFamily::Y: return l / 5 + l / 3 + l / 2 - l + 1;
    case ProperFamily::Cinf: return 1;
    case ProperFamily::Dinf: return l % 2 == 0 ? 1 : 0;
    case ProperFamily::SO3: return l == 0 ? 1 : 0;
    }
    return 0;
}

SubductionResult subduce_continuous(const GroupId& h, const Irrep& irrep)
{
    require_rotation_irrep(irrep);
    if (is_finite(h)) throw DomainError(h.label() + " is finite; use subduce_trace");
    const Structure s = structure(h);
    const int l = irrep.l;
    int c = 0;
    if (irrep.parent.family == Family::SO3) {
        if (s.kind != Kind::Proper) throw DomainError(h.label() + " is not a subgroup of SO3");
        c = proper_frequency(s.R, l);
    } else if (s.kind == Kind::Proper) {
        c = proper_frequency(s.R, l);
    } else if (s.kind == Kind::Inversion) {
        c = irrep.parity > 0 ? proper_frequency(s.R, l) : 0;
    } else {
        c = irrep.parity > 0 ? proper_frequency(s.K, l)
                             : proper_frequency(s.R, l) - proper_frequency(s.K, l);
    }
    return {c, SubductionMethod::AnalyticContinuous};
}

SubductionResult subduce_closed(const GroupId& h, const Irrep& irrep)
{
    require_rotation_irrep(irrep);
    if (!is_finite(h)) throw DomainError("no closed form for " + h.label() + "; use subduce_continuous");
    const int l = irrep.l;
    const Structure s = structure(h);
    auto done = [](int c) { return SubductionResult{c, SubductionMethod::ClosedForm}; };
    if (irrep.parent.family == Family::SO3) {
        if (s.kind != Kind::Proper) throw DomainError(h.label() + " is not a subgroup of SO3");
        return done(proper_frequency(s.R, l));
    }
    switch (s.kind) {
    case Kind::Proper:
        return done(proper_frequency(s.R, l));
    case Kind::Inversion:
        return done(irrep.parity > 0 ? proper_frequency(s.R, l) : 0);
    case Kind::Twisted:
        break;
    }
    // Positive parity sees only K = {det(g) g}; negative parity uses the l^- rows.
    if (irrep.parity > 0) return done(proper_frequency(s.K, l));
    const int n = h.n;
    switch (h.family) {
    case Family::Cs: return done(2 * fl(l + 1, 2));
    case Family::Cnh:
    case Family::S2n: return done(2 * fl(l + n, 2 * n));
    case Family::Cnv: return done(l / n + (l % 2 == 0 ? 0 : 1));
    case Family::Dnh:
    case Family::Dnd: return done(fl(l + n, 2 * n));
    case Family::Td: return done(fl(l + 2, 4) + l / 3 + fl(l + 1, 2) - l);
    default: break;
    }
    throw DomainError("unsupported formula for " + h.label());
}

SubductionResult subduce(const GroupId& h, const Irrep& irrep)
{
    if (!is_finite(h)) return subduce_continuous(h, irrep);
    return subduce_closed(h, irrep);
}

std::vector<std::string> rep_vectors(const GroupId& h, const Irrep& irrep)
{
    require_rotation_irrep(irrep);
    const int l = irrep.l;
    if (h.family == Family::SO3 || h.family == Family::O3) return {"0"};
    const Structure s = structure(h);
    if (irrep.parent.family == Family::SO3) {
        if (s.kind != Kind::Proper) throw DomainError(h.label() + " is not a subgroup of SO3");
        return proper_rows_vector(s.R, l);
    }
    if (irrep.parity > 0) {
        if (s.kind != Kind::Inversion)
            throw DomainError(h.label() + " is not a little group of a positive-parity irrep");
        return proper_rows_vector(s.R, l);
    }
    if (s.kind == Kind::Inversion)
        throw DomainError(h.label() + " contains inversion; not a little group of " + irrep.label());
    return odd_rows_vector(h, l);
}

std::vector<std::string> expand_labels(const std::vector<std::string>& labels)
{
    std::vector<std::string> out;
    const std::string pm = "±";
    for (const auto& s : labels) {
        if (s.size() > pm.size() && s.compare(s.size() - pm.size(), pm.size(), pm) == 0) {
            const std::string m = s.substr(0, s.size() - pm.size());
            out.push_back(m + "+");
            out.push_back(m + "-");
        } else {
            out.push_back(s);
        }
    }
    return out;
}

std::vector<TetrahedralIrrep> tetrahedral_irreps()
{
    return {{"A", 1}, {"E", 1}, {"E'", 1}, {"F", 3}};
}

std::complex<double> tetrahedral_character(const std::string& irrep, const Eigen::Matrix3d& g)
{
    const GroupElement e = GroupElement::from_matrix(g);
    if (e.improper) throw DomainError("element is not in T");
    enum { E, C2, C3, C3sq } cls;
    if (e.angle < 1e-9) cls = E;
    else if (std::abs(e.angle - kPi) < 1e-9) cls = C2;
    else if (std::abs(e.angle - 2 * kPi / 3) < 1e-9)
        cls = e.axis.x() * e.axis.y() * e.axis.z() > 0 ? C3 : C3sq;
    else throw DomainError("element is not in T");
    const std::complex<double> w = std::polar(1.0, 2 * kPi / 3);
    if (irrep == "A") return 1.0;
    if (irrep == "E" || irrep == "E'") {
        const std::complex<double> z = irrep == "E" ? w : std::conj(w);
        switch (cls) {
        case E: case C2: return 1.0;
        case C3: return z;
        case C3sq: return z * z;
        }
    }
    if (irrep == "F") {
        switch (cls) {
        case E: return 3.0;
        case C2: return -1.0;
        default: return 0.0;
        }
    }
    throw ParseError("unknown irrep of T: " + irrep);
}

int tetrahedral_subduction(const std::string& irrep, const GroupId& h)
{
    const auto t = element_matrices({Family::T, 0});
    const auto hs = element_matrices(h);
    const auto q = find_conjugation(hs, t);
    if (!q) throw DomainError(h.label() + " is not a subgroup of T");
    std::complex<double> sum = 0.0;
    for (const auto& g : hs) sum += tetrahedral_character(irrep, *q * g * q->transpose());
    const double avg = sum.real() / static_cast<double>(hs.size());
    const double r = std::round(avg);
    if (std::abs(avg - r) > 1e-9 || std::abs(sum.imag()) > 1e-9)
        throw ConsistencyError("non-integer T subduction");
    return static_cast<int>(r);
}

} // namespace o3lg
