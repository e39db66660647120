#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "gaussnet/symplectic.hpp"

namespace gaussnet {

/// An n-mode Gaussian state at the phase-space level: a 2n x 2n covariance
/// matrix and a 2n mean vector. The covariance matrix is stored exactly
/// symmetrized and is validated on construction.
class GaussianState {
  public:
    /// Symmetrizes `cm`, checks validity at `tol`, throws PhysicsError on
    /// violation.
    GaussianState(Mat cm, Vec mean, double tol = kStateTol);

    /// Zero-mean state from a covariance matrix.
    static GaussianState from_cm(Mat cm, double tol = kStateTol);

    int modes() const { return n_; }
    const Mat& cm() const { return cm_; }
    const Vec& mean() const { return mean_; }

  private:
    int n_;
    Mat cm_;
    Vec mean_;
};

/// n uncorrelated vacua: identity covariance matrix.
GaussianState vacuum(int n_modes);

/// Two-mode pure state in standard form: diagonal blocks gamma*I2,
/// off-diagonal sqrt(gamma^2-1)*diag(1,-1). Requires gamma >= 1.
GaussianState two_mode_pure(double gamma);

/// Two-mode state in standard form with blocks a*I2, b*I2 and off-diagonal
/// diag(c,d). Requires a,b >= 1 and a physical result.
GaussianState two_mode_standard(double a, double b, double c, double d);

/// Three-mode pure state from three single-mode squeezed inputs through a
/// balanced three-splitter. Diagonal 2x2 blocks diag(R+,R-) with
/// R+- = cosh(2 gamma) +- sinh(2 gamma)/3, off-diagonal diag(S,-S) with
/// S = -2 sinh(2 gamma)/3. Requires gamma >= 0.
GaussianState tritter_state(double gamma);

/// Direct sum of covariance matrices; means concatenate.
GaussianState tensor(const GaussianState& s1, const GaussianState& s2);

/// Restrict to the given 0-based modes (partial trace of the rest). Modes
/// must be nonempty, in range, and duplicate-free; output order follows
/// `keep_modes`.
GaussianState reduce(const GaussianState& state, const std::vector<int>& keep_modes);

/// Reorder modes: new mode k is old mode `new_from_old[k]`. A symplectic
/// permutation at the 2x2 block level.
GaussianState permute_modes(const GaussianState& state, const std::vector<int>& new_from_old);

/// Seed-deterministic random valid state: S (diag of nu_k I2) S^T with
/// nu_k uniform in [1,3] and S = random_symplectic. `pure` forces all
/// nu_k = 1.
GaussianState random_state(int n_modes, std::uint64_t seed, bool pure = false);

/// Transform a state by a Gaussian unitary: Gamma -> S Gamma S^T (then
/// re-symmetrized), d -> m + S d. Dimensions must match.
GaussianState apply_unitary(const GaussianState& state, const GaussianUnitary& u);

/// 2x2 reduced covariance block of `mode`.
Eigen::Matrix2d mode_block(const GaussianState& state, int mode);

// --- declarative state constructors (network/CLI sources) ---

struct TwoModePureKind {
    double gamma;
};
struct TwoModeStandardKind {
    double a, b, c, d;
};
struct TritterKind {
    double gamma;
};
struct ExplicitKind {
    Mat cm;
    Vec mean;  // may be empty for zero mean
};
struct RandomKind {
    int n_modes;
    std::uint64_t seed;
};

using StateKind = std::variant<TwoModePureKind, TwoModeStandardKind, TritterKind, ExplicitKind, RandomKind>;

GaussianState make_state(const StateKind& kind);
int kind_modes(const StateKind& kind);

}  // namespace gaussnet
