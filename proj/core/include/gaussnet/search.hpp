#pragma once

#include <cstdint>
#include <vector>

#include "gaussnet/network.hpp"

namespace gaussnet {

enum class SamplerKind {
    RandomSymplectic,  // exp(Omega H) draws
    CanonicalDressed,  // canonical type sweep with random local dressings L * S_type * R
};

struct SearchConfig {
    NetworkSpec spec;
    int samples = 200;
    std::uint64_t seed = 0;
    SamplerKind sampler = SamplerKind::RandomSymplectic;
};

struct SearchImprovement {
    int sample_index = 0;
    double value = 0.0;
};

struct SearchResult {
    double best_value = 0.0;
    std::vector<Eigen::Matrix4d> best_ops;
    std::vector<SearchImprovement> trace;  // strict improvements in sample order
    double bound = 0.0;                    // min source GGQC
};

/// Pure sampling maximization of the resultant GGQC over the operation set.
/// Candidate 0 is the spec's declared operation set, so a spec carrying
/// designed operations always attains the bound; candidates 1..samples-1
/// come from the sampler. Deterministic per seed. Throws std::logic_error
/// if any sample exceeds bound + 1e-9 (the bound is exact; exceeding it
/// means a bug, and it is never clamped).
SearchResult random_search_max_ggqc(const SearchConfig& config);

struct SweepRow {
    double lambda = 0.0;
    double ggqc_value = 0.0;
    bool sufficiency_ok = false;  // every operation passes check_sufficiency at this lambda
    double gap_to_bound = 0.0;    // min source GGQC minus the resultant
};

/// Replace every operation by the canonical `type` form at each lambda of
/// `grid` (type IV uses (lambda, -lambda)) and tabulate the resultant GGQC
/// and sufficiency status. Rows are emitted in grid order.
std::vector<SweepRow> sweep_lambda(const NetworkSpec& spec, CanonicalType type,
                                   const std::vector<double>& grid);

}  // namespace gaussnet
