#include "gaussnet/states.hpp"

#include <cmath>
#include <set>

#include "gaussnet/errors.hpp"
#include "gaussnet/rng.hpp"

namespace gaussnet {

GaussianState::GaussianState(Mat cm, Vec mean, double tol) : cm_(std::move(cm)), mean_(std::move(mean)) {
    if (cm_.rows() != cm_.cols() || cm_.rows() % 2 != 0 || cm_.rows() == 0)
        throw std::invalid_argument("GaussianState: covariance matrix must be square with even dimension");
    n_ = static_cast<int>(cm_.rows()) / 2;
    if (mean_.size() == 0) mean_ = Vec::Zero(2 * n_);
    if (mean_.size() != 2 * n_)
        throw std::invalid_argument("GaussianState: mean dimension mismatch");
    if (!mean_.allFinite() || !cm_.allFinite())
        throw std::invalid_argument("GaussianState: non-finite entries");
    cm_ = ((cm_ + cm_.transpose()) / 2.0).eval();  // stored exactly symmetric
    const CmValidity check = validate_cm(cm_, tol);
    if (!check.ok)
        throw PhysicsError("GaussianState: " + check.reason +
                           " (min eigenvalue of Gamma + i Omega: " + std::to_string(check.min_eigenvalue) + ")");
}

GaussianState GaussianState::from_cm(Mat cm, double tol) { return GaussianState(std::move(cm), Vec(), tol); }

GaussianState vacuum(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("vacuum: mode count must be >= 1");
    return GaussianState::from_cm(Mat::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState two_mode_pure(double gamma) {
    if (gamma < 1.0) throw std::invalid_argument("two_mode_pure: gamma must be >= 1");
    const double off = std::sqrt(gamma * gamma - 1.0);
    Mat cm = Mat::Zero(4, 4);
    cm.block<2, 2>(0, 0) = gamma * Eigen::Matrix2d::Identity();
    cm.block<2, 2>(2, 2) = gamma * Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d c = off * Eigen::Vector2d(1.0, -1.0).asDiagonal();
    cm.block<2, 2>(0, 2) = c;
    cm.block<2, 2>(2, 0) = c;
    return GaussianState::from_cm(std::move(cm), kDefaultTol);
}

GaussianState two_mode_standard(double a, double b, double c, double d) {
    if (a < 1.0 || b < 1.0) throw std::invalid_argument("two_mode_standard: a and b must be >= 1");
    Mat cm = Mat::Zero(4, 4);
    cm.block<2, 2>(0, 0) = a * Eigen::Matrix2d::Identity();
    cm.block<2, 2>(2, 2) = b * Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d off = Eigen::Vector2d(c, d).asDiagonal();
    cm.block<2, 2>(0, 2) = off;
    cm.block<2, 2>(2, 0) = off;
    return GaussianState::from_cm(std::move(cm), kDefaultTol);
}

GaussianState tritter_state(double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("tritter_state: gamma must be >= 0");
    const double rp = std::cosh(2.0 * gamma) + std::sinh(2.0 * gamma) / 3.0;
    const double rm = std::cosh(2.0 * gamma) - std::sinh(2.0 * gamma) / 3.0;
    const double s = -2.0 * std::sinh(2.0 * gamma) / 3.0;
    Mat cm = Mat::Zero(6, 6);
    for (int i = 0; i < 3; ++i) {
        cm(2 * i, 2 * i) = rp;
        cm(2 * i + 1, 2 * i + 1) = rm;
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            cm(2 * i, 2 * j) = s;
            cm(2 * i + 1, 2 * j + 1) = -s;
        }
    }
    return GaussianState::from_cm(std::move(cm), kDefaultTol);
}

GaussianState tensor(const GaussianState& s1, const GaussianState& s2) {
    const int n = s1.modes() + s2.modes();
    Mat cm = Mat::Zero(2 * n, 2 * n);
    cm.topLeftCorner(2 * s1.modes(), 2 * s1.modes()) = s1.cm();
    cm.bottomRightCorner(2 * s2.modes(), 2 * s2.modes()) = s2.cm();
    Vec mean(2 * n);
    mean << s1.mean(), s2.mean();
    return GaussianState(std::move(cm), std::move(mean));
}

namespace {
std::vector<int> coordinate_indices(const std::vector<int>& modes) {
    std::vector<int> idx;
    idx.reserve(2 * modes.size());
    for (int m : modes) {
        idx.push_back(2 * m);
        idx.push_back(2 * m + 1);
    }
    return idx;
}
}  // namespace

GaussianState reduce(const GaussianState& state, const std::vector<int>& keep_modes) {
    if (keep_modes.empty()) throw std::invalid_argument("reduce: mode subset must be nonempty");
    std::set<int> seen;
    for (int m : keep_modes) {
        if (m < 0 || m >= state.modes()) throw std::invalid_argument("reduce: mode index out of range");
        if (!seen.insert(m).second) throw std::invalid_argument("reduce: duplicate mode index");
    }
    const std::vector<int> idx = coordinate_indices(keep_modes);
    const int k = static_cast<int>(idx.size());
    Mat cm(k, k);
    Vec mean(k);
    for (int i = 0; i < k; ++i) {
        mean(i) = state.mean()(idx[i]);
        for (int j = 0; j < k; ++j) cm(i, j) = state.cm()(idx[i], idx[j]);
    }
    return GaussianState(std::move(cm), std::move(mean));
}

GaussianState permute_modes(const GaussianState& state, const std::vector<int>& new_from_old) {
    if (static_cast<int>(new_from_old.size()) != state.modes())
        throw std::invalid_argument("permute_modes: permutation size mismatch");
    std::set<int> seen(new_from_old.begin(), new_from_old.end());
    if (static_cast<int>(seen.size()) != state.modes() || *seen.begin() != 0 ||
        *seen.rbegin() != state.modes() - 1)
        throw std::invalid_argument("permute_modes: not a permutation");
    return reduce(state, new_from_old);  // full-size principal rearrangement
}

GaussianState random_state(int n_modes, std::uint64_t seed, bool pure) {
    if (n_modes < 1) throw std::invalid_argument("random_state: mode count must be >= 1");
    Rng rng(Rng::derive_seed(seed, 0x5eed));
    Vec d(2 * n_modes);
    for (int k = 0; k < n_modes; ++k) {
        const double nu = pure ? 1.0 : rng.uniform(1.0, 3.0);
        d(2 * k) = d(2 * k + 1) = nu;
    }
    const Mat s = random_symplectic(n_modes, seed);
    Mat cm = s * d.asDiagonal() * s.transpose();
    return GaussianState::from_cm(std::move(cm));
}

GaussianState apply_unitary(const GaussianState& state, const GaussianUnitary& u) {
    if (u.s.rows() != 2 * state.modes())
        throw std::invalid_argument("apply_unitary: dimension mismatch");
    Mat cm = u.s * state.cm() * u.s.transpose();
    Vec mean = u.shift + u.s * state.mean();
    return GaussianState(std::move(cm), std::move(mean));
}

Eigen::Matrix2d mode_block(const GaussianState& state, int mode) {
    if (mode < 0 || mode >= state.modes()) throw std::invalid_argument("mode_block: mode index out of range");
    return state.cm().block<2, 2>(2 * mode, 2 * mode);
}

GaussianState make_state(const StateKind& kind) {
    return std::visit(
        [](const auto& k) -> GaussianState {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, TwoModePureKind>) return two_mode_pure(k.gamma);
            else if constexpr (std::is_same_v<T, TwoModeStandardKind>) return two_mode_standard(k.a, k.b, k.c, k.d);
            else if constexpr (std::is_same_v<T, TritterKind>) return tritter_state(k.gamma);
            else if constexpr (std::is_same_v<T, ExplicitKind>) return GaussianState(k.cm, k.mean);
            else return random_state(k.n_modes, k.seed);
        },
        kind);
}

int kind_modes(const StateKind& kind) {
    return std::visit(
        [](const auto& k) -> int {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, TwoModePureKind>) return 2;
            else if constexpr (std::is_same_v<T, TwoModeStandardKind>) return 2;
            else if constexpr (std::is_same_v<T, TritterKind>) return 3;
            else if constexpr (std::is_same_v<T, ExplicitKind>) return static_cast<int>(k.cm.rows()) / 2;
            else return k.n_modes;
        },
        kind);
}

}  // namespace gaussnet
