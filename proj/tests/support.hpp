#pragma once

#include <optional>
#include <vector>

#include "unlabeled/cli_io.hpp"
#include "unlabeled/geometry.hpp"
#include "unlabeled/measurement.hpp"
#include "unlabeled/reconstruction.hpp"

namespace testing_support {

using namespace unlabeled;

struct Match {
    std::vector<std::size_t> perm;  // result vertex i is truth vertex perm[i]
    double rmsd = 0.0;
};

inline std::optional<Match> congruent_match(const Configuration& result, const Configuration& truth) {
    if (result.size() != truth.size()) return std::nullopt;
    auto perm = match_congruent(result, truth, 1e-6);
    if (!perm) return std::nullopt;
    const auto al = align_congruent(result, truth.subset(*perm));
    return Match{*perm, al.residual_rmsd};
}

/// Every assignment, relabeled into truth labels, is the functional of the walk
/// that actually produced the value.
inline bool labels_recovered(const ReconstructionResult& r, const Sidecar& truth, const std::vector<std::size_t>& perm) {
    const std::size_t n = truth.ensemble.n;
    for (const auto& a : r.assignments) {
        const auto& walk = truth.ensemble.walks[truth.permutation[a.value_index]];
        if (!(a.functional.relabeled(perm, n) == walk_to_functional(walk, n))) return false;
    }
    return !r.assignments.empty();
}

/// Re-measuring the result under its discovered functionals reproduces the data.
inline double soundness_error(const ReconstructionResult& r, const UnlabeledDataSet& data) {
    double worst = 0.0;
    const auto l = edge_lengths(r.configuration);
    for (const auto& a : r.assignments) {
        const double v = data.values[a.value_index];
        worst = std::max(worst, std::abs(a.functional.apply(l) - v) / std::max(v, 1e-300));
    }
    return worst;
}

}  // namespace testing_support
