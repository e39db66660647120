#include "gaussnet/network.hpp"

#include <cmath>

#include "gaussnet/errors.hpp"

namespace gaussnet {

Eigen::Matrix4d two_mode_squeezer(double xi) {
    return type_matrix(CanonicalType::I, std::sinh(xi));
}

int NetworkSpec::total_modes() const {
    int n = 0;
    for (const StateKind& kind : sources) n += kind_modes(kind);
    return n;
}

int NetworkSpec::source_of(int mode) const {
    int offset = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        offset += kind_modes(sources[i]);
        if (mode < offset) return static_cast<int>(i);
    }
    throw std::invalid_argument("source_of: mode index out of range");
}

void NetworkSpec::check() const {
    if (sources.empty()) throw std::invalid_argument("NetworkSpec: at least one source required");
    const int n = total_modes();
    for (const NetworkOperation& op : operations) {
        if (op.mode_a == op.mode_b)
            throw std::invalid_argument("NetworkSpec: operation modes must be distinct");
        if (op.mode_a < 0 || op.mode_b < 0 || op.mode_a >= n || op.mode_b >= n)
            throw std::invalid_argument("NetworkSpec: operation mode index out of range");
    }
}

GaussianState build_initial_state(const NetworkSpec& spec) {
    spec.check();
    GaussianState state = make_state(spec.sources.front());
    for (std::size_t i = 1; i < spec.sources.size(); ++i)
        state = tensor(state, make_state(spec.sources[i]));
    return state;
}

namespace {

Eigen::Matrix4d resolve_concrete(const OperationKind& kind) {
    if (const auto* canon = std::get_if<CanonicalOp>(&kind)) return canonical_matrix(canon->form);
    if (const auto* sq = std::get_if<SqueezerOp>(&kind)) return two_mode_squeezer(sq->xi);
    if (const auto* ex = std::get_if<ExplicitOp>(&kind)) {
        if (!is_symplectic(ex->s)) throw PhysicsError("operation matrix is not symplectic");
        return ex->s;
    }
    throw std::invalid_argument("designed operations require run_network (boundary values unknown)");
}

}  // namespace

GaussianState apply_protocol(const GaussianState& state, const NetworkSpec& spec) {
    spec.check();
    GaussianState out = state;
    const int n = state.modes();
    for (const NetworkOperation& op : spec.operations) {
        const Eigen::Matrix4d s4 = resolve_concrete(op.unitary);
        out = apply_unitary(out, GaussianUnitary::from_symplectic(embed_two_mode(s4, op.mode_a, op.mode_b, n)));
    }
    return out;
}

std::pair<GaussianState, GaussianUnitary> standardize_boundary(const GaussianState& state, int mode) {
    const SingleModeWilliamson w = williamson_single_mode(mode_block(state, mode));
    GaussianUnitary u = GaussianUnitary::from_symplectic(embed_single_mode(w.s, mode, state.modes()));
    GaussianState out = apply_unitary(state, u);
    return {std::move(out), std::move(u)};
}

double table_threshold(CanonicalType type, double gamma_out, double gamma_in) {
    if (gamma_out < 1.0 || gamma_in < 1.0)
        throw std::invalid_argument("table_threshold: gamma parameters must be >= 1");
    const double sum2 = (gamma_out + gamma_in) * (gamma_out + gamma_in);
    switch (type) {
        case CanonicalType::I:
            return (-sum2 + std::sqrt(sum2 * sum2 + 4.0 * sum2 * gamma_out * gamma_in * (gamma_out - 1.0))) /
                   (2.0 * sum2);
        case CanonicalType::II:
            return (sum2 + std::sqrt(sum2 * sum2 + 4.0 * sum2 * gamma_out * gamma_in * (gamma_out - 1.0))) /
                   (2.0 * sum2);
        case CanonicalType::III: {
            // kept verbatim; the numeric sufficiency sweep disagrees with this
            // row for gamma_out > 1 and the disagreement is reported, not patched
            const double q = gamma_out * gamma_out + gamma_in * gamma_in;
            return (-sum2 + std::sqrt(q * q + 4.0 * gamma_out * gamma_in * (gamma_out * gamma_out - 1.0))) /
                   (2.0 * gamma_out * gamma_in);
        }
        default:
            throw std::invalid_argument("table_threshold: only rows I-III carry a lambda threshold");
    }
}

DesignResult design_optimal(const DesignInput& input, double margin) {
    if (input.gamma_out < 1.0 || input.gamma_in < 1.0)
        throw std::invalid_argument("design_optimal: gamma parameters must be >= 1");
    DesignResult out;
    switch (input.type) {
        case CanonicalType::I:
        case CanonicalType::II:
        case CanonicalType::III: {
            out.threshold_lambda_sq = table_threshold(input.type, input.gamma_out, input.gamma_in);
            double lam_sq = std::max(out.threshold_lambda_sq, 0.0) * (1.0 + margin);
            if (lam_sq <= 0.0 && input.type == CanonicalType::I) lam_sq = margin;
            out.form = {input.type, std::sqrt(lam_sq), 0.0};
            return out;
        }
        case CanonicalType::IV: {
            const double go = input.gamma_out, gi = input.gamma_in;
            const double target = go * go * go * gi;
            auto condition = [&](double t) { return (go * t + gi) * (gi * t + go); };
            double t_star = 0.0;
            if (condition(0.0) < target) {
                double lo = 0.0, hi = 1.0;
                while (condition(hi) < target) hi *= 2.0;
                for (int i = 0; i < 200; ++i) {
                    const double mid = 0.5 * (lo + hi);
                    (condition(mid) >= target ? hi : lo) = mid;
                }
                t_star = hi;
            }
            out.threshold_lambda_sq = t_star;
            const double l1 = std::sqrt(t_star);
            out.form = {CanonicalType::IV, l1, -l1};
            out.condition_lhs = condition(t_star);
            out.condition_rhs = target;
            return out;
        }
        default:
            throw std::invalid_argument("design_optimal: types V and VI are absent from the design table");
    }
}

SufficiencyCheck check_sufficiency(const Eigen::Matrix4d& s, double gamma1, double gamma2) {
    SufficiencyCheck out;
    out.lhs = gamma1 * gamma1 * gamma1 * gamma1 * gamma2 * gamma2;
    const Eigen::Matrix2d s11 = s.block<2, 2>(0, 0);
    const Eigen::Matrix2d s12 = s.block<2, 2>(0, 2);
    const Eigen::Matrix2d s21 = s.block<2, 2>(2, 0);
    const Eigen::Matrix2d s22 = s.block<2, 2>(2, 2);
    const double d1 = (gamma1 * s11 * s11.transpose() + gamma2 * s12 * s12.transpose()).determinant();
    const double d2 = (gamma1 * s21 * s21.transpose() + gamma2 * s22 * s22.transpose()).determinant();
    out.rhs = d1 * d2;
    out.holds = out.rhs >= out.lhs * (1.0 - 1e-12);
    return out;
}

ProtocolRun run_network(const NetworkSpec& spec) {
    spec.check();
    GaussianState state = build_initial_state(spec);
    const int n = state.modes();
    std::vector<OpTrace> traces;
    traces.reserve(spec.operations.size());
    for (const NetworkOperation& op : spec.operations) {
        state = standardize_boundary(state, op.mode_a).first;
        state = standardize_boundary(state, op.mode_b).first;
        OpTrace trace;
        trace.mode_a = op.mode_a;
        trace.mode_b = op.mode_b;
        trace.gamma_a = std::sqrt(mode_block(state, op.mode_a).determinant());
        trace.gamma_b = std::sqrt(mode_block(state, op.mode_b).determinant());
        trace.same_source = spec.source_of(op.mode_a) == spec.source_of(op.mode_b);
        // the design table and the sufficiency check are entered with the
        // determinants of the standardized boundary blocks
        const double ga = trace.gamma_a * trace.gamma_a;
        const double gb = trace.gamma_b * trace.gamma_b;
        if (const auto* designed = std::get_if<DesignedOp>(&op.unitary)) {
            const DesignResult design = design_optimal({designed->type, ga, gb});
            trace.s = canonical_matrix(design.form);
            trace.designed_lambda_sq = design.form.lambda * design.form.lambda;
        } else {
            trace.s = resolve_concrete(op.unitary);
        }
        trace.sufficiency = check_sufficiency(trace.s, ga, gb);
        state = apply_unitary(state, GaussianUnitary::from_symplectic(embed_two_mode(trace.s, op.mode_a, op.mode_b, n)));
        traces.push_back(std::move(trace));
    }
    return {std::move(state), std::move(traces)};
}

NetworkBoundReport verify_network_bound(const NetworkSpec& spec, int n_max) {
    spec.check();
    NetworkBoundReport report;
    report.bound = std::numeric_limits<double>::infinity();
    for (const StateKind& kind : spec.sources) {
        if (kind_modes(kind) < 2)
            throw std::invalid_argument("verify_network_bound: every source needs at least 2 modes");
        const double value = ggqc(make_state(kind), n_max).value;
        report.source_ggqc.push_back(value);
        report.bound = std::min(report.bound, value);
    }
    ProtocolRun run = run_network(spec);
    report.resultant_ggqc = ggqc(run.state, n_max).value;
    report.gap = report.bound - report.resultant_ggqc;
    for (const OpTrace& trace : run.ops) {
        report.sufficiency_ok.push_back(trace.sufficiency.holds);
        report.out_of_scope.push_back(trace.same_source);
        report.boundary_gammas.push_back({trace.gamma_a, trace.gamma_b});
        report.designed_lambda_sq.push_back(trace.designed_lambda_sq);
    }
    return report;
}

namespace {
NetworkSpec three_tritters(double gamma) {
    NetworkSpec spec;
    spec.sources = {TritterKind{gamma}, TritterKind{gamma}, TritterKind{gamma}};
    return spec;
}
}  // namespace

NetworkSpec chain_example(double gamma) {
    NetworkSpec spec = three_tritters(gamma);
    spec.operations = {{2, 3, DesignedOp{CanonicalType::I}}, {5, 6, DesignedOp{CanonicalType::I}}};
    spec.node_assignment = {{0, "P1"}, {1, "P1"}, {2, "P2"}, {3, "P2"}, {4, "P4"},
                            {5, "P3"}, {6, "P3"}, {7, "P5"}, {8, "P5"}};
    return spec;
}

NetworkSpec star_example(double gamma) {
    NetworkSpec spec = three_tritters(gamma);
    spec.operations = {{2, 3, DesignedOp{CanonicalType::I}}, {2, 6, DesignedOp{CanonicalType::I}}};
    spec.node_assignment = {{0, "P1"}, {1, "P1"}, {2, "P4"}, {3, "P4"}, {4, "P2"},
                            {5, "P2"}, {6, "P4"}, {7, "P3"}, {8, "P3"}};
    return spec;
}

}  // namespace gaussnet
