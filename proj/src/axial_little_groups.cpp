#include "o3lg/axial_little_groups.hpp"

#include "o3lg/errors.hpp"

#include <cstdlib>

namespace o3lg {

AxialResult little_group_cinf(int m)
{
    if (m == 0) return {{Family::Cinf, 0}, 1};
    return {make_group(Family::Cn, std::abs(m)), 1};
}

AxialResult little_group_cinfh(int m, int parity)
{
    const int n = std::abs(m);
    if (n == 0) return {parity > 0 ? GroupId{Family::Cinfh, 0} : GroupId{Family::Cinf, 0}, 1};
    if (n == 1) return {parity > 0 ? GroupId{Family::Ci, 0} : GroupId{Family::Cs, 0}, 1};
    if (n % 2 == 0) {
        if (parity > 0) return {make_group(Family::Cnh, n), 1};
        // i Rz(pi/n) acts as -exp(i pi) = +1, so the stabiliser is S2n; the
        // printed list has Cn here.
        return {make_group(Family::S2n, n), 1, true, make_group(Family::Cn, n)};
    }
    return {parity > 0 ? make_group(Family::S2n, n) : make_group(Family::Cnh, n), 1};
}

AxialResult little_group_cinfv(int m)
{
    if (m < 0) throw DomainError("Cinfv labels are non-negative");
    if (m == 0) return {{Family::Cinfv, 0}, 1};
    return {make_group(Family::Cnv, m), 2};
}

AxialResult little_group_dinf(const Irrep& irrep)
{
    switch (irrep.axial) {
    case AxialType::A1: return {{Family::Dinf, 0}, 1};
    case AxialType::A2: return {{Family::Cinf, 0}, 2, true, {Family::Cinf, 0}};
    case AxialType::E: return {make_group(Family::Dn, irrep.l), 2};
    default: throw DomainError("not a Dinf irrep: " + irrep.label());
    }
}

AxialResult little_group_dinfh(const Irrep& irrep)
{
    const bool plus = irrep.parity > 0;
    switch (irrep.axial) {
    case AxialType::A1: return {plus ? GroupId{Family::Dinfh, 0} : GroupId{Family::Dinf, 0}, 1};
    case AxialType::A2: return {plus ? GroupId{Family::Cinfh, 0} : GroupId{Family::Cinfv, 0}, 1};
    case AxialType::E: {
        const int n = irrep.l;
        // n = 1 follows the odd-n rule (D1d = C2h, D1h = C2v); the printed
        // list gives C2h for both parities.
        if (n == 1 && !plus) return {make_group(Family::Cnv, 2), 2, true, make_group(Family::Cnh, 2)};
        const bool h = (n % 2 == 0) == plus;
        return {make_group(h ? Family::Dnh : Family::Dnd, n), 2};
    }
    default: throw DomainError("not a Dinfh irrep: " + irrep.label());
    }
}

AxialResult axial_little_group(const Irrep& irrep)
{
    switch (irrep.parent.family) {
    case Family::Cinf: return little_group_cinf(irrep.m);
    case Family::Cinfh: return little_group_cinfh(irrep.m, irrep.parity);
    case Family::Cinfv: return little_group_cinfv(irrep.m);
    case Family::Dinf: return little_group_dinf(irrep);
    case Family::Dinfh: return little_group_dinfh(irrep);
    default: throw DomainError(irrep.parent.label() + " is not an infinite axial group");
    }
}

std::vector<Irrep> axial_irreps(const GroupId& parent, int m_max)
{
    std::vector<Irrep> out;
    auto add = [&](const std::string& s) { out.push_back(parse_irrep(parent, s)); };
    switch (parent.family) {
    case Family::Cinf:
        for (int m = -m_max; m <= m_max; ++m) add(std::to_string(m));
        break;
    case Family::Cinfh:
        for (int m = -m_max; m <= m_max; ++m) {
            add(std::to_string(m) + "+");
            add(std::to_string(m) + "-");
        }
        break;
    case Family::Cinfv:
        for (int m = 0; m <= m_max; ++m) add(std::to_string(m));
        break;
    case Family::Dinf:
        add("A1");
        add("A2");
        for (int n = 1; n <= m_max; ++n) add("E" + std::to_string(n));
        break;
    case Family::Dinfh:
        for (const char* s : {"+", "-"}) {
            add(std::string("A1") + s);
            add(std::string("A2") + s);
        }
        for (int n = 1; n <= m_max; ++n) {
            add("E" + std::to_string(n) + "+");
            add("E" + std::to_string(n) + "-");
        }
        break;
    default:
        throw DomainError(parent.label() + " is not an infinite axial group");
    }
    return out;
}

} // namespace o3lg
