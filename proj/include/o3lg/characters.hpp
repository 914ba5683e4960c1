#pragma once

#include "o3lg/group_catalog.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace o3lg {

enum class AxialType { None, M, A1, A2, E };

// Irrep of SO(3), O(3) or one of the infinite axial groups.
//   SO3:   l
//   O3:    l, parity
//   Cinf:  m (signed)                 Cinfh: m (signed), parity
//   Cinfv: m >= 0                     Dinf:  A1, A2, E_n
//   Dinfh: A1+-, A2+-, E_n+-
struct Irrep {
    GroupId parent{Family::SO3, 0};
    int l = 0;       // rank for SO3/O3; n of E_n
    int parity = 0;  // +1/-1 where the label carries one, else 0
    AxialType axial = AxialType::None;
    int m = 0;       // signed m for the M-type axial labels

    int dim() const;
    std::string label() const;

    static Irrep so3(int l);
    static Irrep o3(int l, int parity);
};

// Parses "<l>" (SO3), "<l>+" / "<l>-" (O3) and the axial labels listed above.
Irrep parse_irrep(const GroupId& parent, std::string_view text);

double chi_rotation(int l, double phi);
// Character of l^parity on an orthogonal matrix (improper = inversion o rotation).
double chi_o3(int l, int parity, const Eigen::Matrix3d& g);
double chi_o3(const Irrep& irrep, const GroupElement& e);

enum class SubductionMethod { Trace, ClosedForm, AnalyticContinuous };

struct SubductionResult {
    int c = 0;
    SubductionMethod method = SubductionMethod::Trace;
};

std::string method_name(SubductionMethod m);

SubductionResult subduce_trace(const GroupId& h, const Irrep& irrep);
SubductionResult subduce_continuous(const GroupId& h, const Irrep& irrep);
SubductionResult subduce_closed(const GroupId& h, const Irrep& irrep);
// Closed form where tabulated, analytic for Lie groups, trace otherwise.
SubductionResult subduce(const GroupId& h, const Irrep& irrep);

// Proper-group frequency for rank l (floor formulas).
int proper_frequency(const ProperGroup& p, int l);

// Tesseral labels of the tabulated representation vectors: "0", "3+", "2-", "3±".
std::vector<std::string> rep_vectors(const GroupId& h, const Irrep& irrep);
// Expands "m±" into "m+", "m-".
std::vector<std::string> expand_labels(const std::vector<std::string>& labels);

// Class functions of the tetrahedral group T (A, E, E', F), evaluated on
// elements of T in the standard orientation.
struct TetrahedralIrrep {
    std::string name;
    int dim;
};
std::vector<TetrahedralIrrep> tetrahedral_irreps();
std::complex<double> tetrahedral_character(const std::string& irrep, const Eigen::Matrix3d& g);
// Subduction frequency of a T irrep onto a subgroup of T in standard orientation.
int tetrahedral_subduction(const std::string& irrep, const GroupId& h);

} // namespace o3lg
