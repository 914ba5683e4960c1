#pragma once

#include "o3lg/characters.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace o3lg {

// Coefficients over the real tesseral basis of rank l, ordered
// 0, 1+, 1-, 2+, 2-, ..., l+, l-.
struct CoeffVector {
    int l = 0;
    int parity = 1;
    Eigen::VectorXd coeffs;

    static CoeffVector zero(int l, int parity);
    double& operator[](const std::string& label);
    double operator[](const std::string& label) const;
};

int coeff_index(const std::string& label, int l);
std::string coeff_label(int index);

// {"l": 2, "parity": "+", "coeffs": {"0": 1.0, "2+": 0.5}}
CoeffVector parse_coeff_json(const std::string& text);
std::string to_json(const CoeffVector& a);

// Real tesseral harmonics, orthonormal on the unit sphere, no Condon-Shortley
// phase: Z0 = Y_l0, Z_{m+} ~ P_l^m cos(m phi), Z_{m-} ~ P_l^m sin(m phi).
double tesseral_eval(int l, const std::string& label, double theta, double phi);
// All 2l+1 values at a unit vector, in coefficient order.
Eigen::VectorXd tesseral_all(int l, const Eigen::Vector3d& r);
double eval(const CoeffVector& a, const Eigen::Vector3d& r);

// D(g) a holds the coefficients of r -> f(g^-1 r); improper g = -R acts as
// parity * D(R).
Eigen::MatrixXd rotation_matrix(int l, int parity, const Eigen::Matrix3d& g);
Eigen::MatrixXd rotation_matrix(int l, int parity, const GroupElement& e);

// Group-averaged projector onto the invariant subspace of h in the irrep.
// Lie groups use a finite witness with the same fixed-point set at rank l.
Eigen::MatrixXd projector(const GroupId& h, const Irrep& irrep);
int projector_rank(const GroupId& h, const Irrep& irrep);
std::vector<CoeffVector> invariant_basis(const GroupId& h, const Irrep& irrep);

struct SymmetryWitness {
    GroupElement element;
    double residual = 0.0;
};

struct SymmetryReport {
    GroupId group;
    Eigen::Matrix3d orientation = Eigen::Matrix3d::Identity();  // standard axes -> detected axes
    std::vector<SymmetryWitness> witnesses;
    std::vector<std::string> warnings;
};

struct DetectOptions {
    double tol = 1e-7;
    int grid = 2000;
    bool use_parity = true;  // false: report the proper rotation group only
};

SymmetryReport detect_symmetry(const CoeffVector& a, const DetectOptions& opt = {});

// Classifies a closed finite set of orthogonal matrices.
GroupId classify_elements(const std::vector<Eigen::Matrix3d>& els);
// Elements of `ambient` that fix a, within tol relative to |a|.
std::vector<Eigen::Matrix3d> stabilizer(const std::vector<Eigen::Matrix3d>& ambient,
                                        const CoeffVector& a, double tol = 1e-7);

struct Canonical {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    CoeffVector coeffs;
    double residual = 0.0;
};

// Zeroes 1+ and 1- and, for l >= 2, `target` by a rotation (three Euler angles).
Canonical canonicalize(const CoeffVector& a, const std::string& target = "2-", int starts = 32,
                       std::uint64_t seed = 1);

struct L2Diagonal {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d eigenvalues = Eigen::Vector3d::Zero();  // ascending
    CoeffVector rotated;
    bool degenerate = false;
};

// Symmetric traceless matrix M with f(r) = r^T M r on the sphere.
Eigen::Matrix3d l2_matrix(const CoeffVector& a);
L2Diagonal diagonalize_l2(const CoeffVector& a);

struct RepVectorFailure {
    std::uint64_t seed = 0;
    GroupId detected;
};

struct RepVectorReport {
    GroupId group;
    std::string irrep;
    std::vector<std::string> labels;  // empty: invariant basis was used
    int trials = 0;
    int passed = 0;
    std::vector<RepVectorFailure> failures;
};

RepVectorReport verify_rep_vectors(const GroupId& h, const Irrep& irrep, int trials,
                                   std::uint64_t seed = 1);

} // namespace o3lg
