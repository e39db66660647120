#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace gaussnet {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Default tolerance for symplecticity and covariance-matrix validity checks.
/// Suitable for double precision with matrix norms up to ~1e3.
inline constexpr double kDefaultTol = 1e-9;

/// Validation tolerance applied to states produced by chained transforms,
/// where a little drift beyond kDefaultTol is expected.
inline constexpr double kStateTol = 1e-8;

/// The 2n x 2n symplectic form: block-diagonal copies of [[0,1],[-1,0]]
/// in (q1,p1,...,qn,pn) ordering.
Mat omega(int n_modes);

/// max |S Omega S^T - Omega|.
double symplectic_defect(const Mat& s);

/// True iff `s` is square with even dimension and its symplectic defect is
/// within `tol`.
bool is_symplectic(const Mat& s, double tol = kDefaultTol);

/// Analytic inverse of a symplectic matrix: S^-1 = -Omega S^T Omega.
Mat symplectic_inverse(const Mat& s);

/// Outcome of a covariance-matrix validity check. `reason` is empty when ok;
/// otherwise "not-symmetric" or "not-physical". `min_eigenvalue` is the
/// smallest eigenvalue of the Hermitian matrix Gamma + i*Omega.
struct CmValidity {
    bool ok = false;
    std::string reason;
    double min_eigenvalue = 0.0;
};

/// Check that `gamma` is symmetric within `tol` and satisfies the
/// uncertainty condition Gamma + i*Omega >= -tol (smallest eigenvalue).
CmValidity validate_cm(const Mat& gamma, double tol = kDefaultTol);

/// An affine symplectic map (S, m): covariance matrices transform as
/// S Gamma S^T, means as m + S d.
struct GaussianUnitary {
    Mat s;
    Vec shift;

    /// Validates symplecticity of `s` at kDefaultTol and that `shift`
    /// has matching dimension.
    GaussianUnitary(Mat s_in, Vec shift_in);

    /// Symplectic-only map with zero shift.
    static GaussianUnitary from_symplectic(Mat s_in);

    int modes() const { return static_cast<int>(s.rows()) / 2; }
};

/// Expand a 4x4 symplectic acting on (q_a,p_a,q_b,p_b) to the full 2n x 2n
/// matrix that is the identity on all other modes. Modes are 0-based and
/// must be distinct; mode_a < mode_b is not required.
Mat embed_two_mode(const Eigen::Matrix4d& s4, int mode_a, int mode_b, int n_modes);

/// Embed a single-mode symplectic (2x2, det 1) at `mode`.
Mat embed_single_mode(const Eigen::Matrix2d& s2, int mode, int n_modes);

/// Seed-deterministic random symplectic: exp(Omega H) for a symmetric H with
/// entries uniform in [-0.5, 0.5]. Passes is_symplectic at 1e-9 for the
/// mode counts used here (n <= ~10).
Mat random_symplectic(int n_modes, std::uint64_t seed);

/// Result of the single-mode Williamson reduction: s * A * s^T = nu * I2
/// with det(s) = 1 and nu = sqrt(det A).
struct SingleModeWilliamson {
    Eigen::Matrix2d s;
    double nu = 0.0;
};

/// Reduce a symmetric positive definite 2x2 matrix to isotropic form.
/// Throws PhysicsError if `a` is not symmetric positive definite.
SingleModeWilliamson williamson_single_mode(const Eigen::Matrix2d& a);

}  // namespace gaussnet
