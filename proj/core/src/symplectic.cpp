#include "gaussnet/symplectic.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "gaussnet/errors.hpp"
#include "gaussnet/rng.hpp"

namespace gaussnet {

Mat omega(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("omega: mode count must be >= 1");
    Mat w = Mat::Zero(2 * n_modes, 2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        w(2 * k, 2 * k + 1) = 1.0;
        w(2 * k + 1, 2 * k) = -1.0;
    }
    return w;
}

double symplectic_defect(const Mat& s) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0 || s.rows() == 0)
        throw std::invalid_argument("symplectic_defect: matrix must be square with even dimension");
    const Mat w = omega(static_cast<int>(s.rows()) / 2);
    return (s * w * s.transpose() - w).cwiseAbs().maxCoeff();
}

bool is_symplectic(const Mat& s, double tol) { return symplectic_defect(s) <= tol; }

Mat symplectic_inverse(const Mat& s) {
    const Mat w = omega(static_cast<int>(s.rows()) / 2);
    return -w * s.transpose() * w;
}

CmValidity validate_cm(const Mat& gamma, double tol) {
    if (gamma.rows() != gamma.cols() || gamma.rows() % 2 != 0 || gamma.rows() == 0)
        throw std::invalid_argument("validate_cm: matrix must be square with even dimension");
    CmValidity out;
    const double asym = (gamma - gamma.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol) {
        out.reason = "not-symmetric";
        return out;
    }
    const int n = static_cast<int>(gamma.rows()) / 2;
    Eigen::MatrixXcd h = gamma.cast<std::complex<double>>();
    h += std::complex<double>(0.0, 1.0) * omega(n).cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    out.min_eigenvalue = es.eigenvalues().minCoeff();
    if (out.min_eigenvalue < -tol) {
        out.reason = "not-physical";
        return out;
    }
    out.ok = true;
    return out;
}

GaussianUnitary::GaussianUnitary(Mat s_in, Vec shift_in) : s(std::move(s_in)), shift(std::move(shift_in)) {
    if (!is_symplectic(s, kDefaultTol))
        throw PhysicsError("GaussianUnitary: matrix is not symplectic");
    if (shift.size() != s.rows())
        throw std::invalid_argument("GaussianUnitary: shift dimension mismatch");
}

GaussianUnitary GaussianUnitary::from_symplectic(Mat s_in) {
    Vec zero = Vec::Zero(s_in.rows());
    return GaussianUnitary(std::move(s_in), std::move(zero));
}

Mat embed_two_mode(const Eigen::Matrix4d& s4, int mode_a, int mode_b, int n_modes) {
    if (mode_a == mode_b) throw std::invalid_argument("embed_two_mode: modes must be distinct");
    if (mode_a < 0 || mode_b < 0 || mode_a >= n_modes || mode_b >= n_modes)
        throw std::invalid_argument("embed_two_mode: mode index out of range");
    Mat full = Mat::Identity(2 * n_modes, 2 * n_modes);
    const int ia = 2 * mode_a, ib = 2 * mode_b;
    full.block<2, 2>(ia, ia) = s4.block<2, 2>(0, 0);
    full.block<2, 2>(ia, ib) = s4.block<2, 2>(0, 2);
    full.block<2, 2>(ib, ia) = s4.block<2, 2>(2, 0);
    full.block<2, 2>(ib, ib) = s4.block<2, 2>(2, 2);
    return full;
}

Mat embed_single_mode(const Eigen::Matrix2d& s2, int mode, int n_modes) {
    if (mode < 0 || mode >= n_modes)
        throw std::invalid_argument("embed_single_mode: mode index out of range");
    Mat full = Mat::Identity(2 * n_modes, 2 * n_modes);
    full.block<2, 2>(2 * mode, 2 * mode) = s2;
    return full;
}

Mat random_symplectic(int n_modes, std::uint64_t seed) {
    if (n_modes < 1) throw std::invalid_argument("random_symplectic: mode count must be >= 1");
    Rng rng(seed);
    const int d = 2 * n_modes;
    Mat h(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) h(i, j) = h(j, i) = rng.uniform(-0.5, 0.5);
    // exp of the Hamiltonian matrix Omega*H is symplectic for symmetric H
    Mat generator = omega(n_modes) * h;
    return generator.exp();
}

SingleModeWilliamson williamson_single_mode(const Eigen::Matrix2d& a) {
    if (std::abs(a(0, 1) - a(1, 0)) > 1e-12 * std::max(1.0, a.cwiseAbs().maxCoeff()))
        throw PhysicsError("williamson_single_mode: matrix is not symmetric");
    const double det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    if (a(0, 0) <= 0.0 || det <= 0.0)
        throw PhysicsError("williamson_single_mode: matrix is not positive definite");
    SingleModeWilliamson out;
    out.nu = std::sqrt(det);
    if ((a - out.nu * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <=
        1e-14 * std::max(1.0, out.nu)) {
        out.s = Eigen::Matrix2d::Identity();
        return out;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(a);
    Eigen::Matrix2d q = es.eigenvectors();
    if (q.determinant() < 0) q.col(1) *= -1.0;  // rotation; leaves Q D Q^T intact
    const Eigen::Vector2d w = es.eigenvalues();
    out.s = std::sqrt(out.nu) * w.cwiseSqrt().cwiseInverse().asDiagonal() * q.transpose();
    return out;
}

}  // namespace gaussnet
