#pragma once

#include <cstdint>
#include <vector>

#include "gaussnet/states.hpp"

namespace gaussnet {

/// Cap on the mode count for exhaustive bipartition enumeration
/// (2^(n-1)-1 subsets). Raise per call if you really want more.
inline constexpr int kDefaultMaxModes = 20;

/// One side of a 2-partition of the modes, canonically the side containing
/// mode 0. Bit k of `mask` selects mode k.
struct Bipartition {
    int n_modes = 0;
    std::uint32_t mask = 0;

    std::uint32_t full_mask() const { return (n_modes >= 32) ? 0xffffffffu : ((1u << n_modes) - 1u); }
    std::uint32_t complement() const { return full_mask() & ~mask; }
    std::vector<int> modes() const;
    std::vector<int> complement_modes() const;
};

/// All canonical bipartitions of n modes in ascending mask order:
/// exactly 2^(n-1)-1 entries, each containing mode 0.
std::vector<Bipartition> enumerate_bipartitions(int n_modes, int n_max = kDefaultMaxModes);

/// Determinant of the principal submatrix of `cm` on the 2x2 blocks of the
/// modes in `mode_mask` (pivoted LU). The empty mask is rejected.
double principal_det(const Mat& cm, std::uint32_t mode_mask);

/// Per-bipartition correlation 1 - det(Gamma) / (D(alpha) D(alpha^c)).
/// Symmetric under alpha <-> complement.
double m_value(const GaussianState& state, const Bipartition& alpha);

struct GgqcRow {
    std::uint32_t mask = 0;
    double det_alpha = 0.0;
    double det_complement = 0.0;
    double m = 0.0;
};

struct GgqcReport {
    double value = 0.0;
    Bipartition argmin;
    double det_gamma = 0.0;
    std::vector<GgqcRow> table;  // one row per canonical bipartition, mask ascending
    bool degenerate_minor = false;  // some principal minor fell below 1e-12
};

/// Exhaustive minimum of m_value over all canonical bipartitions. Ties are
/// broken toward the lowest mask within 1e-12. Requires n >= 2.
GgqcReport ggqc(const GaussianState& state, int n_max = kDefaultMaxModes);

/// Analytic values for the reference families; oracles for the exhaustive
/// route.
double closed_form_two_mode_pure(double gamma);                              // 1 - 1/gamma^4
double closed_form_two_mode_standard(double a, double b, double c, double d);  // 1 - (ab-c^2)(ab-d^2)/(a^2 b^2)
double closed_form_tritter(double gamma);  // 1 - 81/(5+4cosh(4 gamma))^2

}  // namespace gaussnet
