#include "gaussnet/classify.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "gaussnet/errors.hpp"

namespace gaussnet {

std::string to_string(CanonicalType type) {
    switch (type) {
        case CanonicalType::I: return "I";
        case CanonicalType::II: return "II";
        case CanonicalType::III: return "III";
        case CanonicalType::IV: return "IV";
        case CanonicalType::V: return "V";
        case CanonicalType::VI: return "VI";
    }
    throw std::invalid_argument("to_string: bad canonical type");
}

CanonicalType canonical_type_from_string(const std::string& name) {
    if (name == "I") return CanonicalType::I;
    if (name == "II") return CanonicalType::II;
    if (name == "III") return CanonicalType::III;
    if (name == "IV") return CanonicalType::IV;
    if (name == "V") return CanonicalType::V;
    if (name == "VI") return CanonicalType::VI;
    throw std::invalid_argument("canonical_type_from_string: unknown type '" + name + "'");
}

SpecialSvd special_svd_2x2(const Eigen::Matrix2d& m) {
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    SpecialSvd out;
    out.u = svd.matrixU();
    out.v = svd.matrixV();
    out.sigma = svd.singularValues();
    // push any reflection into sigma[1] so u and v are rotations
    if (out.u.determinant() < 0) {
        out.u.col(1) *= -1.0;
        out.sigma(1) *= -1.0;
    }
    if (out.v.determinant() < 0) {
        out.v.col(1) *= -1.0;
        out.sigma(1) *= -1.0;
    }
    return out;
}

Eigen::Matrix4d type_matrix(CanonicalType type, double lambda, double lambda2) {
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    const Eigen::Matrix2d id = Eigen::Matrix2d::Identity();
    switch (type) {
        case CanonicalType::I: {
            const double c = std::sqrt(lambda * lambda + 1.0);
            s.block<2, 2>(0, 0) = c * id;
            s.block<2, 2>(2, 2) = c * id;
            const Eigen::Matrix2d off = Eigen::Vector2d(lambda, -lambda).asDiagonal();
            s.block<2, 2>(0, 2) = off;
            s.block<2, 2>(2, 0) = off;
            return s;
        }
        case CanonicalType::II: {
            if (std::abs(lambda) < 1.0)
                throw std::invalid_argument("type_matrix: type II needs |lambda| >= 1");
            const double r = std::sqrt(lambda * lambda - 1.0);
            const Eigen::Matrix2d diag = Eigen::Vector2d(r, -r).asDiagonal();
            s.block<2, 2>(0, 0) = diag;
            s.block<2, 2>(2, 2) = diag;
            s.block<2, 2>(0, 2) = lambda * id;
            s.block<2, 2>(2, 0) = lambda * id;
            return s;
        }
        case CanonicalType::III:
            s.setIdentity();
            s(0, 2) = lambda;
            s(3, 1) = -lambda;
            return s;
        case CanonicalType::IV:
            s(0, 0) = lambda;
            s(0, 2) = 1.0;
            s(1, 3) = 1.0;
            s(2, 0) = 1.0;
            s(3, 1) = 1.0;
            s(3, 3) = lambda2;
            return s;
        case CanonicalType::V:
            s.block<2, 2>(0, 2) = id;
            s.block<2, 2>(2, 0) = -id;
            return s;
        case CanonicalType::VI: {
            if (std::abs(lambda) > 1.0)
                throw std::invalid_argument("type_matrix: type VI needs |lambda| <= 1");
            const double c = std::sqrt(1.0 - lambda * lambda);
            s.block<2, 2>(0, 0) = c * id;
            s.block<2, 2>(2, 2) = c * id;
            s.block<2, 2>(0, 2) = lambda * id;
            s.block<2, 2>(2, 0) = -lambda * id;
            return s;
        }
    }
    throw std::invalid_argument("type_matrix: bad canonical type");
}

Eigen::Matrix4d canonical_matrix(const CanonicalForm& form) {
    switch (form.type) {
        case CanonicalType::I:
            if (form.lambda < 0.0) throw std::invalid_argument("canonical_matrix: type I needs lambda >= 0");
            break;
        case CanonicalType::II:
            if (form.lambda <= 1.0) throw std::invalid_argument("canonical_matrix: type II needs lambda > 1");
            break;
        case CanonicalType::III:
            break;
        case CanonicalType::IV:
            // only the lambda2 = -lambda line of the two-parameter family is symplectic
            if (std::abs(form.lambda2 + form.lambda) > 1e-9 * std::max(1.0, std::abs(form.lambda)))
                throw std::invalid_argument("canonical_matrix: type IV needs lambda2 = -lambda");
            break;
        case CanonicalType::V:
            break;
        case CanonicalType::VI:
            if (form.lambda < 0.0 || form.lambda >= 1.0)
                throw std::invalid_argument("canonical_matrix: type VI needs 0 <= lambda < 1");
            break;
    }
    return type_matrix(form.type, form.lambda, form.lambda2);
}

namespace {

constexpr double kRerouteEps = 1e-10;

Eigen::Matrix4d block_diag(const Eigen::Matrix2d& a, const Eigen::Matrix2d& b) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m.block<2, 2>(0, 0) = a;
    m.block<2, 2>(2, 2) = b;
    return m;
}

Eigen::Matrix2d inv2(const Eigen::Matrix2d& m) {
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Eigen::Matrix2d out;
    out << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return out / det;
}

/// A, B in SL(2,R) with A * m * B = sqrt(|det m|) * diag(1, sign det m).
/// Requires det m != 0.
void isotropize(const Eigen::Matrix2d& m, Eigen::Matrix2d& a, Eigen::Matrix2d& b) {
    const SpecialSvd svd = special_svd_2x2(m);
    const double s1 = svd.sigma(0), s2 = svd.sigma(1);
    Eigen::Matrix2d squeeze = Eigen::Vector2d(std::sqrt(std::abs(s2) / s1), std::sqrt(s1 / std::abs(s2))).asDiagonal();
    a = squeeze * svd.u.transpose();
    b = svd.v;
}

}  // namespace

ClassificationResult classify(const Eigen::Matrix4d& s, double tol, double tol_branch) {
    if (!is_symplectic(s, tol)) throw PhysicsError("classify: input is not symplectic");
    const Eigen::Matrix2d s11 = s.block<2, 2>(0, 0);
    const double d = s11.determinant();

    ClassificationResult result;

    if (s11.cwiseAbs().maxCoeff() <= tol_branch) {
        // S = [[~0, X], [Y, ~0]] with X, Y in SL(2,R)
        const Eigen::Matrix2d x = s.block<2, 2>(0, 2);
        const Eigen::Matrix2d y = s.block<2, 2>(2, 0);
        result.form = {CanonicalType::V, 0.0, 0.0};
        result.left = block_diag(inv2(x), -inv2(y));
        result.right = Eigen::Matrix4d::Identity();
    } else if (std::abs(d) <= tol_branch) {
        // rank-1 diagonal blocks; rotate them to diag(p, 0) first
        const SpecialSvd sv1 = special_svd_2x2(s11);
        const SpecialSvd sv2 = special_svd_2x2(s.block<2, 2>(2, 2));
        const Eigen::Matrix4d l1 = block_diag(sv1.u.transpose(), sv2.u.transpose());
        const Eigen::Matrix4d r1 = block_diag(sv1.v, sv2.v);
        const Eigen::Matrix4d t = l1 * s * r1;
        // X, Y are unimodular; sending them to the identity leaves diag(p,0)
        // and diag(0,-p) in the corners
        const Eigen::Matrix2d x = t.block<2, 2>(0, 2);
        const Eigen::Matrix2d y = t.block<2, 2>(2, 0);
        const Eigen::Matrix4d l2 = block_diag(Eigen::Matrix2d::Identity(), inv2(y));
        const Eigen::Matrix4d r2 = block_diag(Eigen::Matrix2d::Identity(), inv2(x));
        result.left = l2 * l1;
        result.right = r1 * r2;
        const double lambda1 = (result.left * s * result.right)(0, 0);
        result.form = {CanonicalType::IV, lambda1, -lambda1};
    } else {
        // bring both diagonal blocks to a*diag(1,eps), a = sqrt|det S11|
        Eigen::Matrix2d a1, b1, a2, b2;
        isotropize(s11, a1, b1);
        isotropize(s.block<2, 2>(2, 2), a2, b2);
        const Eigen::Matrix4d l1 = block_diag(a1, a2);
        const Eigen::Matrix4d r1 = block_diag(b1, b2);
        const Eigen::Matrix4d t = l1 * s * r1;

        const double a = std::sqrt(std::abs(d));
        const double eps = d > 0 ? 1.0 : -1.0;
        const Eigen::Matrix2d e_inv = Eigen::Vector2d(1.0 / a, eps / a).asDiagonal();
        const Eigen::Matrix2d e = Eigen::Vector2d(a, eps * a).asDiagonal();
        const Eigen::Matrix2d n = t.block<2, 2>(0, 2) * e_inv;
        const SpecialSvd nsvd = special_svd_2x2(n);

        if (std::abs(d - 1.0) <= tol_branch || std::abs(nsvd.sigma(1)) < kRerouteEps) {
            // det S12 ~ 0: the off-diagonal block cannot be balanced; align it
            // to diag(lambda, 0) and report type III
            const Eigen::Matrix2d c1 = nsvd.u.transpose();
            const Eigen::Matrix2d c2 = nsvd.v.transpose();
            const Eigen::Matrix4d l2 = block_diag(c1, c2);
            const Eigen::Matrix4d r2 = block_diag(e_inv * inv2(c1) * e, e_inv * inv2(c2) * e);
            result.left = l2 * l1;
            result.right = r1 * r2;
            result.form = {CanonicalType::III, (result.left * s * result.right)(0, 2), 0.0};
        } else {
            const double u = std::pow(std::abs(nsvd.sigma(1)) / nsvd.sigma(0), 0.25);
            const Eigen::Matrix2d dl = Eigen::Vector2d(u, 1.0 / u).asDiagonal();
            const Eigen::Matrix2d dr_inv = Eigen::Vector2d(1.0 / u, u).asDiagonal();
            const Eigen::Matrix2d c1 = dl * nsvd.u.transpose();
            const Eigen::Matrix2d c2 = dr_inv * nsvd.v.transpose();
            const Eigen::Matrix4d l2 = block_diag(c1, c2);
            const Eigen::Matrix4d r2 = block_diag(e_inv * inv2(c1) * e, e_inv * inv2(c2) * e);
            result.left = l2 * l1;
            result.right = r1 * r2;
            const double lambda = std::sqrt(nsvd.sigma(0) * std::abs(nsvd.sigma(1))) * a;
            const CanonicalType type = d > 1.0 ? CanonicalType::I : (d < 0.0 ? CanonicalType::II : CanonicalType::VI);
            result.form = {type, lambda, 0.0};
        }
    }

    result.residual = (result.left * s * result.right - canonical_matrix(result.form)).cwiseAbs().maxCoeff();
    return result;
}

double verify_classification(const Eigen::Matrix4d& s, const ClassificationResult& result) {
    const Eigen::Matrix4d canon = canonical_matrix(result.form);
    double defect = (result.left * s * result.right - canon).cwiseAbs().maxCoeff();
    for (const Eigen::Matrix4d& m : {result.left, result.right}) {
        defect = std::max(defect, m.block<2, 2>(0, 2).cwiseAbs().maxCoeff());
        defect = std::max(defect, m.block<2, 2>(2, 0).cwiseAbs().maxCoeff());
        defect = std::max(defect, symplectic_defect(m));
    }
    return defect;
}

}  // namespace gaussnet
