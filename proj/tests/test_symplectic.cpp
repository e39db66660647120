#include <doctest.h>

#include "gaussnet/errors.hpp"
#include "gaussnet/rng.hpp"
#include "gaussnet/states.hpp"
#include "gaussnet/symplectic.hpp"
#include "test_oracles.hpp"

using namespace gaussnet;

TEST_CASE("omega basics") {
    const Mat w1 = omega(1);
    CHECK(w1(0, 1) == 1.0);
    CHECK(w1(1, 0) == -1.0);
    CHECK(w1(0, 0) == 0.0);

    const Mat w2 = omega(2);
    CHECK(w2.rows() == 4);
    CHECK(w2.block<2, 2>(0, 0) == w1);
    CHECK(w2.block<2, 2>(2, 2) == w1);
    CHECK(w2.block<2, 2>(0, 2).isZero(0.0));

    for (int n = 1; n <= 5; ++n) {
        const Mat w = omega(n);
        CHECK((w * w + Mat::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() == 0.0);
        CHECK((w + w.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(Eigen::PartialPivLU<Mat>(w).determinant() == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(omega(0), std::invalid_argument);
}

TEST_CASE("is_symplectic") {
    CHECK(is_symplectic(Mat::Identity(6, 6), 1e-12));

    // canonical type-I matrix at lambda = 1
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    const double c = std::sqrt(2.0);
    s.block<2, 2>(0, 0) = c * Eigen::Matrix2d::Identity();
    s.block<2, 2>(2, 2) = c * Eigen::Matrix2d::Identity();
    s.block<2, 2>(0, 2) = Eigen::Vector2d(1, -1).asDiagonal();
    s.block<2, 2>(2, 0) = Eigen::Vector2d(1, -1).asDiagonal();
    CHECK(is_symplectic(s, 1e-12));

    // pure-state CMs are S S^T for symplectic S and so lie in the group
    CHECK(is_symplectic(tritter_state(0.5).cm(), 1e-9));
    // mixed-state CMs do not
    CHECK_FALSE(is_symplectic(two_mode_standard(2, 2, 1, -1).cm(), 1e-6));
    CHECK_FALSE(is_symplectic(2.0 * Mat::Identity(4, 4), 1e-6));

    CHECK_THROWS_AS(is_symplectic(Mat::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("validate_cm") {
    CHECK(validate_cm(Mat::Identity(4, 4)).ok);

    const CmValidity half = validate_cm(0.5 * Mat::Identity(2, 2));
    CHECK_FALSE(half.ok);
    CHECK(half.reason == "not-physical");
    CHECK(half.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));

    CHECK(validate_cm(tritter_state(0.8).cm(), 1e-9).ok);

    Mat asym = Mat::Identity(2, 2);
    asym(0, 1) = 1e-3;
    CHECK(validate_cm(asym).reason == "not-symmetric");
}

TEST_CASE("apply_unitary") {
    const GaussianState state = tritter_state(0.4);
    const GaussianState same = apply_unitary(state, GaussianUnitary::from_symplectic(Mat::Identity(6, 6)));
    CHECK((same.cm() - state.cm()).cwiseAbs().maxCoeff() == 0.0);

    // a rotation leaves an isotropic single-mode block alone
    const double th = 0.77;
    Eigen::Matrix2d rot;
    rot << std::cos(th), std::sin(th), -std::sin(th), std::cos(th);
    const GaussianState two = two_mode_pure(1.7);
    const GaussianState rotated = apply_unitary(two, GaussianUnitary::from_symplectic(embed_single_mode(rot, 0, 2)));
    CHECK((mode_block(rotated, 0) - mode_block(two, 0)).cwiseAbs().maxCoeff() < 1e-12);

    // two-mode squeezer on vacuum gives the pure standard form, gamma = cosh(2 xi)
    const double xi = 0.35;
    Eigen::Matrix4d sq = Eigen::Matrix4d::Zero();
    sq.block<2, 2>(0, 0) = std::cosh(xi) * Eigen::Matrix2d::Identity();
    sq.block<2, 2>(2, 2) = std::cosh(xi) * Eigen::Matrix2d::Identity();
    sq.block<2, 2>(0, 2) = std::sinh(xi) * Eigen::Vector2d(1, -1).asDiagonal();
    sq.block<2, 2>(2, 0) = std::sinh(xi) * Eigen::Vector2d(1, -1).asDiagonal();
    const GaussianState squeezed = apply_unitary(vacuum(2), GaussianUnitary::from_symplectic(sq));
    CHECK((squeezed.cm() - two_mode_pure(std::cosh(2 * xi)).cm()).cwiseAbs().maxCoeff() < 1e-12);

    CHECK_THROWS_AS(apply_unitary(two, GaussianUnitary::from_symplectic(Mat::Identity(6, 6))),
                    std::invalid_argument);
    CHECK_THROWS_AS(GaussianUnitary::from_symplectic(2.0 * Mat::Identity(4, 4)), PhysicsError);
}

TEST_CASE("apply then inverse restores the state") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const GaussianState state = random_state(3, seed);
        const Mat s = random_symplectic(3, seed + 1000);
        const GaussianState forward = apply_unitary(state, GaussianUnitary::from_symplectic(s));
        const GaussianState back = apply_unitary(forward, GaussianUnitary::from_symplectic(symplectic_inverse(s)));
        CHECK((back.cm() - state.cm()).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("apply_unitary preserves validity") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const GaussianState state = random_state(1 + static_cast<int>(seed % 4), seed);
        const Mat s = random_symplectic(state.modes(), Rng::derive_seed(seed, 77));
        const GaussianState out = apply_unitary(state, GaussianUnitary::from_symplectic(s));
        CHECK(validate_cm(out.cm(), 1e-8).ok);
    }
}

TEST_CASE("embed_two_mode") {
    const Eigen::Matrix4d s4 = random_symplectic(2, 5);
    CHECK((embed_two_mode(s4, 0, 1, 2) - s4).cwiseAbs().maxCoeff() == 0.0);
    CHECK(embed_two_mode(Eigen::Matrix4d::Identity(), 1, 3, 5).isIdentity(0.0));

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Eigen::Matrix4d s = random_symplectic(2, seed);
        CHECK(symplectic_defect(embed_two_mode(s, 1, 3, 5)) < 1e-9);
        CHECK(symplectic_defect(embed_two_mode(s, 4, 2, 5)) < 1e-9);
    }

    CHECK_THROWS_AS(embed_two_mode(s4, 2, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(embed_two_mode(s4, 0, 5, 5), std::invalid_argument);
}

TEST_CASE("random_symplectic determinism and defects") {
    const Mat a = random_symplectic(2, 42);
    const Mat b = random_symplectic(2, 42);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a - random_symplectic(2, 43)).cwiseAbs().maxCoeff() > 1e-3);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Mat s = random_symplectic(2, seed);
        CHECK(symplectic_defect(s) <= 1e-9);
        CHECK(std::abs(Eigen::PartialPivLU<Mat>(s).determinant() - 1.0) <= 1e-9);
    }
}

TEST_CASE("williamson_single_mode") {
    const auto iso = williamson_single_mode(1.8 * Eigen::Matrix2d::Identity());
    CHECK(iso.s.isIdentity(0.0));
    CHECK(iso.nu == doctest::Approx(1.8).epsilon(1e-15));

    const auto diag = williamson_single_mode(Eigen::Vector2d(2.0, 0.5).asDiagonal());
    CHECK(diag.nu == doctest::Approx(1.0).epsilon(1e-14));
    Eigen::Matrix2d a;
    a << 2.0, 0.5, 0.5, 1.0;
    const auto w = williamson_single_mode(a);
    CHECK(w.nu == doctest::Approx(1.3228756555322953).epsilon(1e-14));  // sqrt(1.75)
    CHECK((w.s * a * w.s.transpose() - w.nu * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(w.s.determinant() - 1.0) < 1e-12);

    Rng rng(99);
    for (int i = 0; i < 500; ++i) {
        Eigen::Matrix2d m;
        m << rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2);
        const Eigen::Matrix2d spd = m * m.transpose() + 0.05 * Eigen::Matrix2d::Identity();
        const auto ww = williamson_single_mode(spd);
        CHECK((ww.s * spd * ww.s.transpose() - ww.nu * Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(ww.nu == doctest::Approx(std::sqrt(spd.determinant())).epsilon(1e-12));
    }

    Eigen::Matrix2d indef;
    indef << 1.0, 2.0, 2.0, 1.0;
    CHECK_THROWS_AS(williamson_single_mode(indef), PhysicsError);
}

TEST_CASE("validity agrees with the symplectic spectrum oracle") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const GaussianState state = random_state(3, seed);
        CHECK(oracles::min_symplectic_eigenvalue(state.cm()) >= 1.0 - 1e-9);
    }
    CHECK(oracles::min_symplectic_eigenvalue(0.5 * Mat::Identity(2, 2)) == doctest::Approx(0.5).epsilon(1e-12));
}
