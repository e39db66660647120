#include "gaussnet/ggqc.hpp"

#include <Eigen/LU>
#include <cmath>

#include "gaussnet/errors.hpp"

namespace gaussnet {

namespace {
constexpr double kTieTol = 1e-12;
constexpr double kDegenerateMinor = 1e-12;

std::vector<int> mask_modes(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int k = 0; k < n; ++k)
        if (mask >> k & 1u) out.push_back(k);
    return out;
}
}  // namespace

std::vector<int> Bipartition::modes() const { return mask_modes(mask, n_modes); }
std::vector<int> Bipartition::complement_modes() const { return mask_modes(complement(), n_modes); }

std::vector<Bipartition> enumerate_bipartitions(int n_modes, int n_max) {
    if (n_modes < 2) throw std::invalid_argument("enumerate_bipartitions: need at least 2 modes");
    if (n_modes > n_max)
        throw CapacityError("enumerate_bipartitions: " + std::to_string(n_modes) + " modes exceed the limit of " +
                            std::to_string(n_max) + "; raise n_max to enumerate 2^(n-1)-1 bipartitions");
    const std::uint32_t rest = 1u << (n_modes - 1);
    std::vector<Bipartition> out;
    out.reserve(rest - 1);
    // canonical representative always contains mode 0; skip the full set
    for (std::uint32_t t = 0; t + 1 < rest; ++t) out.push_back({n_modes, 1u | (t << 1)});
    return out;
}

double principal_det(const Mat& cm, std::uint32_t mode_mask) {
    if (mode_mask == 0) throw std::invalid_argument("principal_det: empty mode subset");
    const int n = static_cast<int>(cm.rows()) / 2;
    const std::vector<int> modes = mask_modes(mode_mask, n);
    const int k = static_cast<int>(modes.size());
    if (k == 1) {
        const int i = 2 * modes[0];
        return cm(i, i) * cm(i + 1, i + 1) - cm(i, i + 1) * cm(i + 1, i);
    }
    if (2 * k == static_cast<int>(cm.rows())) return Eigen::PartialPivLU<Mat>(cm).determinant();
    Mat sub(2 * k, 2 * k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) sub.block<2, 2>(2 * r, 2 * c) = cm.block<2, 2>(2 * modes[r], 2 * modes[c]);
    return Eigen::PartialPivLU<Mat>(sub).determinant();
}

double m_value(const GaussianState& state, const Bipartition& alpha) {
    if (alpha.n_modes != state.modes()) throw std::invalid_argument("m_value: bipartition size mismatch");
    if (alpha.mask == 0 || alpha.complement() == 0)
        throw std::invalid_argument("m_value: bipartition must be proper");
    const double det_gamma = principal_det(state.cm(), alpha.full_mask());
    const double da = principal_det(state.cm(), alpha.mask);
    const double dc = principal_det(state.cm(), alpha.complement());
    return 1.0 - det_gamma / (da * dc);
}

GgqcReport ggqc(const GaussianState& state, int n_max) {
    const int n = state.modes();
    if (n < 2) throw std::invalid_argument("ggqc: undefined for single-mode states");
    const std::vector<Bipartition> parts = enumerate_bipartitions(n, n_max);
    GgqcReport report;
    report.det_gamma = Eigen::PartialPivLU<Mat>(state.cm()).determinant();
    report.table.reserve(parts.size());
    double best = std::numeric_limits<double>::infinity();
    for (const Bipartition& p : parts) {
        const double da = principal_det(state.cm(), p.mask);
        const double dc = principal_det(state.cm(), p.complement());
        if (da < kDegenerateMinor || dc < kDegenerateMinor) report.degenerate_minor = true;
        const double m = 1.0 - report.det_gamma / (da * dc);
        report.table.push_back({p.mask, da, dc, m});
        if (m < best) best = m;
    }
    report.value = best;
    // lowest mask within the tie band wins; evaluation order never matters
    for (const GgqcRow& row : report.table) {
        if (row.m <= best + kTieTol) {
            report.argmin = {n, row.mask};
            break;
        }
    }
    return report;
}

double closed_form_two_mode_pure(double gamma) {
    if (gamma < 1.0) throw std::invalid_argument("closed_form_two_mode_pure: gamma must be >= 1");
    const double g2 = gamma * gamma;
    return 1.0 - 1.0 / (g2 * g2);
}

double closed_form_two_mode_standard(double a, double b, double c, double d) {
    if (a < 1.0 || b < 1.0) throw std::invalid_argument("closed_form_two_mode_standard: a and b must be >= 1");
    const double ab = a * b;
    return 1.0 - (ab - c * c) * (ab - d * d) / (ab * ab);
}

double closed_form_tritter(double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("closed_form_tritter: gamma must be >= 0");
    const double x = 5.0 + 4.0 * std::cosh(4.0 * gamma);
    return 1.0 - 81.0 / (x * x);
}

}  // namespace gaussnet
