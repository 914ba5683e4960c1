#pragma once

#include <Eigen/Dense>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace o3lg {

enum class Family {
    C1, Ci, Cs, Cn, Cnh, Cnv, S2n, Dn, Dnh, Dnd,
    T, Td, Th, O, Oh, Y, Yh,
    Cinf, Cinfh, Cinfv, Dinf, Dinfh, SO3, O3
};

// Closed subgroup of O(3) up to conjugacy.  n is the order parameter of the
// parameterised families (n >= 2) and 0 otherwise.  For S2n the group is S_{2n};
// odd n prints as C{n}i.
struct GroupId {
    Family family = Family::C1;
    int n = 0;

    auto operator<=>(const GroupId&) const = default;
    std::string label() const;
};

// Builds a GroupId, resolving n = 1 degeneracies (D1 -> C2, S2 -> Ci, ...).
GroupId make_group(Family f, int n = 0);
GroupId canonicalize_label(std::string_view raw);

// Every closed subgroup G of O(3) is determined by its rotation part R and the
// proper group K = {det(g) g : g in G}.  Either G = R (Proper), G = R x Ci
// (Inversion), or G = R u -(K \ R) with [K:R] = 2 (Twisted).
enum class ProperFamily { C, D, T, O, Y, Cinf, Dinf, SO3 };

struct ProperGroup {
    ProperFamily f = ProperFamily::C;
    int n = 1;  // used by C and D only; D1 is never formed

    auto operator<=>(const ProperGroup&) const = default;
};

enum class Kind { Proper, Inversion, Twisted };

struct Structure {
    Kind kind = Kind::Proper;
    ProperGroup K;
    ProperGroup R;
};

Structure structure(const GroupId& g);
GroupId from_structure(const Structure& s);

struct GroupElement {
    Eigen::Vector3d axis{0, 0, 1};
    double angle = 0.0;     // in [0, pi]; the axis carries the sense of rotation
    bool improper = false;  // inversion composed with the rotation

    Eigen::Matrix3d matrix() const;
    static GroupElement from_matrix(const Eigen::Matrix3d& m);
};

Eigen::Matrix3d rotation(const Eigen::Vector3d& axis, double angle);

// Closes a generator set under composition; entries closer than tol in
// Frobenius norm are identified.  Throws DomainError past `cap` elements.
std::vector<Eigen::Matrix3d> closure(const std::vector<Eigen::Matrix3d>& gens,
                                     double tol = 1e-9, std::size_t cap = 240);

bool is_finite(const GroupId& g);
bool is_proper(const GroupId& g);
bool is_axial_infinite(const GroupId& g);

// Element matrices in the standard orientation: principal axis z, C2' along x,
// sigma_v containing x, cubic 4-fold axes along x, y, z; Y has its 5-fold axis
// along z, a 2-fold axis along y and further 5-fold axes at azimuth pi/5 + 2k pi/5.
std::vector<Eigen::Matrix3d> element_matrices(const GroupId& g);
std::vector<GroupElement> elements(const GroupId& g);
std::vector<Eigen::Matrix3d> generators(const GroupId& g);

// Rotation Q with Q g Q^T in k for every g in h.  h may be a generating set;
// k must be a full element set.  Returns nullopt when no such Q exists.
std::optional<Eigen::Matrix3d> find_conjugation(const std::vector<Eigen::Matrix3d>& h,
                                                const std::vector<Eigen::Matrix3d>& k,
                                                double tol = 1e-6);

std::optional<long> group_order(const GroupId& g);  // nullopt: infinite

struct GroupDims {
    int lie_dim = 0;
    int fbar = 0;
};

GroupDims dims(const GroupId& g);

// Lie dimension of the normaliser of g in O(3).
int normaliser_dim(const GroupId& g);

// Ordering key used for deterministic listings: Lie groups first, then by
// decreasing order, then family, then n.
bool listing_less(const GroupId& a, const GroupId& b);

std::string family_name(Family f);

} // namespace o3lg
