#include <doctest.h>

#include "gaussnet/errors.hpp"
#include "gaussnet/ggqc.hpp"
#include "gaussnet/rng.hpp"
#include "test_oracles.hpp"

using namespace gaussnet;

TEST_CASE("enumerate_bipartitions") {
    const auto two = enumerate_bipartitions(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].mask == 0b01);

    const auto three = enumerate_bipartitions(3);
    REQUIRE(three.size() == 3);
    CHECK(three[0].mask == 0b001);
    CHECK(three[1].mask == 0b011);
    CHECK(three[2].mask == 0b101);

    CHECK(enumerate_bipartitions(9).size() == 255);
    CHECK_THROWS_AS(enumerate_bipartitions(1), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_bipartitions(21), CapacityError);
    CHECK(enumerate_bipartitions(21, 21).size() == (1u << 20) - 1);
}

TEST_CASE("principal_det") {
    const GaussianState tri = tritter_state(0.7);
    const double rp = std::cosh(1.4) + std::sinh(1.4) / 3.0;
    const double rm = std::cosh(1.4) - std::sinh(1.4) / 3.0;
    CHECK(principal_det(tri.cm(), 0b001) == doctest::Approx(rp * rm).epsilon(1e-14));
    CHECK(principal_det(tri.cm(), 0b111) == doctest::Approx(1.0).epsilon(1e-12));

    // pivoted-LU route against the cofactor-expansion oracle
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Mat m(6, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) m(i, j) = rng.uniform(-2.0, 2.0);
        m = (m + m.transpose()).eval();
        for (std::uint32_t mask : {0b001u, 0b010u, 0b011u, 0b101u, 0b111u}) {
            std::vector<int> idx;
            for (int k = 0; k < 3; ++k)
                if (mask >> k & 1) {
                    idx.push_back(2 * k);
                    idx.push_back(2 * k + 1);
                }
            Mat sub(idx.size(), idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = m(idx[i], idx[j]);
            CHECK(principal_det(m, mask) ==
                  doctest::Approx(oracles::laplace_det(sub)).epsilon(1e-10));
        }
    }

    // principal minors of valid CMs never drop below 1
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const GaussianState state = random_state(4, seed);
        for (const Bipartition& p : enumerate_bipartitions(4)) {
            CHECK(principal_det(state.cm(), p.mask) >= 1.0 - 1e-9);
            CHECK(principal_det(state.cm(), p.complement()) >= 1.0 - 1e-9);
        }
    }

    CHECK_THROWS_AS(principal_det(tri.cm(), 0), std::invalid_argument);
}

TEST_CASE("m_value") {
    const GaussianState prod = tensor(random_state(2, 1), random_state(2, 2));
    CHECK(std::abs(m_value(prod, {4, 0b0011})) < 1e-10);  // cut along the product

    const double g = 1.8;
    CHECK(m_value(two_mode_pure(g), {2, 0b01}) ==
          doctest::Approx(1.0 - 1.0 / (g * g * g * g)).epsilon(1e-12));

    const double gt = 0.5;
    const double rp = std::cosh(2 * gt) + std::sinh(2 * gt) / 3.0;
    const double rm = std::cosh(2 * gt) - std::sinh(2 * gt) / 3.0;
    CHECK(m_value(tritter_state(gt), {3, 0b001}) ==
          doctest::Approx(1.0 - 1.0 / (rp * rp * rm * rm)).epsilon(1e-12));

    // symmetric under complementation
    const GaussianState s = random_state(4, 17);
    for (const Bipartition& p : enumerate_bipartitions(4)) {
        const Bipartition swapped{4, p.complement()};
        CHECK(m_value(s, p) == doctest::Approx(m_value(s, swapped)).epsilon(1e-12));
    }
}

TEST_CASE("ggqc against the closed forms") {
    CHECK(ggqc(tensor(two_mode_pure(2.0), two_mode_pure(3.0))).value <= 1e-10);

    for (double g : {0.0, 0.3, 0.5, 0.8}) {
        CHECK(std::abs(ggqc(tritter_state(g)).value - closed_form_tritter(g)) < 1e-10);
    }
    CHECK(ggqc(two_mode_standard(2, 1.5, 0.8, -0.6)).value ==
          doctest::Approx(closed_form_two_mode_standard(2, 1.5, 0.8, -0.6)).epsilon(1e-13));
    CHECK(ggqc(two_mode_standard(2, 2, 1, -1)).value == doctest::Approx(0.4375).epsilon(1e-13));

    // all tritter cuts tie; lowest mask must win
    CHECK(ggqc(tritter_state(0.5)).argmin.mask == 0b001);

    CHECK_THROWS_AS(ggqc(vacuum(1)), std::invalid_argument);
}

TEST_CASE("closed_form values") {
    CHECK(closed_form_two_mode_pure(1.0) == 0.0);
    CHECK(closed_form_tritter(0.0) == 0.0);
    CHECK(closed_form_tritter(0.5) == doctest::Approx(0.79848424843866433).epsilon(1e-15));
    CHECK(closed_form_two_mode_standard(2, 1.5, 0.8, -0.6) ==
          doctest::Approx(0.30773333333333333).epsilon(1e-15));
    CHECK_THROWS_AS(closed_form_two_mode_pure(0.5), std::invalid_argument);
}

TEST_CASE("report table is complete and consistent") {
    const GgqcReport report = ggqc(random_state(4, 8));
    CHECK(report.table.size() == 7);
    double best = 2.0;
    for (const GgqcRow& row : report.table) best = std::min(best, row.m);
    CHECK(report.value == best);
    CHECK_FALSE(report.degenerate_minor);
    CHECK(report.det_gamma >= 1.0 - 1e-9);
}

// measure properties on a reduced sample; the acceptance suite runs the full
// 500-state version

namespace {
GaussianState random_valid_state(std::uint64_t seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    return random_state(n, Rng::derive_seed(seed, 101));
}
}  // namespace

TEST_CASE("measure range on random states") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const GaussianState state = random_valid_state(seed);
        const GgqcReport report = ggqc(state);
        for (const GgqcRow& row : report.table) {
            CHECK(row.m >= -1e-9);
            CHECK(row.m <= 1.0 + 1e-9);
        }
        CHECK(report.value >= -1e-9);
        CHECK(report.value <= 1.0 + 1e-9);
    }
}

TEST_CASE("product states score zero") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const GaussianState prod = tensor(random_state(2, seed), random_state(1 + seed % 3, seed + 500));
        CHECK(ggqc(prod).value <= 1e-10);
    }
}

TEST_CASE("permutation invariance with argmin mapping") {
    Rng rng(12345);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const GaussianState state = random_valid_state(seed);
        const int n = state.modes();
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.next_u64() % (i + 1)]);

        const GgqcReport before = ggqc(state);
        const GgqcReport after = ggqc(permute_modes(state, perm));
        CHECK(std::abs(before.value - after.value) <= 1e-10);

        // the permuted argmin names the same physical cut
        std::uint32_t mapped = 0;
        for (int k = 0; k < n; ++k)
            if (before.argmin.mask >> perm[k] & 1u) mapped |= 1u << k;
        if (!(mapped & 1u)) mapped = Bipartition{n, mapped}.complement();
        const double m_mapped = m_value(permute_modes(state, perm), {n, mapped});
        CHECK(std::abs(m_mapped - after.value) <= 1e-9);
    }
}

TEST_CASE("local single-mode unitary invariance") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const GaussianState state = random_valid_state(seed);
        const int n = state.modes();
        Mat local = Mat::Identity(2 * n, 2 * n);
        for (int k = 0; k < n; ++k)
            local.block<2, 2>(2 * k, 2 * k) = random_symplectic(1, Rng::derive_seed(seed, 7000 + k));
        const GaussianState dressed = apply_unitary(state, GaussianUnitary::from_symplectic(local));
        CHECK(std::abs(ggqc(dressed).value - ggqc(state).value) <= 1e-8);
    }
}

TEST_CASE("kickout never increases m") {
    Rng rng(777);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const GaussianState state = random_valid_state(seed);
        const int n = state.modes();
        if (n < 3) continue;
        for (const Bipartition& alpha : enumerate_bipartitions(n)) {
            // random subset T intersecting both sides
            std::uint32_t t = static_cast<std::uint32_t>(rng.next_u64()) & alpha.full_mask();
            if ((t & alpha.mask) == 0 || (t & alpha.complement()) == 0) continue;
            const auto popcount = [](std::uint32_t x) { return __builtin_popcount(x); };
            if (popcount(t) < 2) continue;
            std::vector<int> keep;
            std::uint32_t induced = 0;
            int pos = 0;
            for (int k = 0; k < n; ++k) {
                if (!(t >> k & 1u)) continue;
                keep.push_back(k);
                if (alpha.mask >> k & 1u) induced |= 1u << pos;
                ++pos;
            }
            const GaussianState kicked = reduce(state, keep);
            if (induced == 0 || induced == Bipartition{pos, induced}.full_mask()) continue;
            CHECK(m_value(kicked, {pos, induced}) <= m_value(state, alpha) + 1e-8);
        }
    }
}
