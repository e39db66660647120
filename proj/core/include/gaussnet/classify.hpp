#pragma once

#include <string>

#include "gaussnet/symplectic.hpp"

namespace gaussnet {

/// The six normal forms of Sp(4,R) under left/right multiplication by
/// block-diagonal (local) symplectics. The diagonal-block determinant
/// d = det(S11) is a complete branch invariant:
///   I: d > 1,  II: d < 0,  III: d = 1,  IV: d = 0 with S11 != 0,
///   V: S11 = 0,  VI: 0 < d < 1.
enum class CanonicalType { I, II, III, IV, V, VI };

std::string to_string(CanonicalType type);
CanonicalType canonical_type_from_string(const std::string& name);

/// A canonical form with its real parameter(s). `lambda2` is used by type IV
/// only; symplecticity pins lambda2 = -lambda there (the matrix with
/// independent parameters fails S Omega S^T = Omega).
struct CanonicalForm {
    CanonicalType type = CanonicalType::III;
    double lambda = 0.0;
    double lambda2 = 0.0;
};

/// Rotation-sign-normalized SVD of a 2x2 matrix: m = u * diag(sigma) * v^T
/// with det(u) = det(v) = +1, sigma[0] >= |sigma[1]|, sigma[0] >= 0 and
/// sigma[0]*sigma[1] = det(m). Signs are carried by sigma[1].
struct SpecialSvd {
    Eigen::Matrix2d u;
    Eigen::Vector2d sigma;
    Eigen::Matrix2d v;
};
SpecialSvd special_svd_2x2(const Eigen::Matrix2d& m);

/// The canonical 4x4 matrix for a form. Enforces the parameter domains
/// (I: lambda >= 0, II: lambda > 1, III: any real, IV: lambda2 = -lambda,
/// V: none, VI: 0 <= lambda < 1); throws std::invalid_argument outside them.
Eigen::Matrix4d canonical_matrix(const CanonicalForm& form);

/// Same matrix patterns without the strict domain checks (parameters must
/// still be representable, e.g. |lambda| >= 1 for type II). Used to probe
/// thresholds that sit exactly on a domain edge.
Eigen::Matrix4d type_matrix(CanonicalType type, double lambda, double lambda2 = 0.0);

struct ClassificationResult {
    CanonicalForm form;
    Eigen::Matrix4d left;   // block-diagonal symplectic L
    Eigen::Matrix4d right;  // block-diagonal symplectic R
    double residual = 0.0;  // max |L*S*R - canonical_matrix(form)|
};

/// Constructive classification of a symplectic 4x4 matrix: produces local
/// L, R with L*S*R equal to a canonical form. Branches on det(S11) with a
/// band of width `tol_branch` around the degenerate values {0, 1}; inside a
/// band the nearer degenerate branch is taken and the residual reports the
/// distance. Throws PhysicsError if `s` is not symplectic within `tol`.
ClassificationResult classify(const Eigen::Matrix4d& s, double tol = kDefaultTol,
                              double tol_branch = 1e-7);

/// Recompute max(|L*S*R - canonical|, block-diagonality and symplecticity
/// defects of L and R).
double verify_classification(const Eigen::Matrix4d& s, const ClassificationResult& result);

}  // namespace gaussnet
