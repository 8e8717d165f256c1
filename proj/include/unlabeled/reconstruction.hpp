#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "unlabeled/geometry.hpp"
#include "unlabeled/measurement.hpp"
#include "unlabeled/rank.hpp"

namespace unlabeled {

class ReconstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoBaseFound : public ReconstructionError {
public:
    using ReconstructionError::ReconstructionError;
};

class AmbiguousResult : public ReconstructionError {
public:
    using ReconstructionError::ReconstructionError;
};

class UnsupportedDimension : public ReconstructionError {
public:
    using ReconstructionError::ReconstructionError;
};

struct ReconstructionOptions {
    double membership_tol = 1e-9;  // normalized determinant residual
    double lookup_tol = 1e-11;     // relative to the largest data value
    double relation_tol = kDefaultRelationTol;
    double singular_tol = 1e-6;
    /// d = 3 only: every ping and triangle passes through one vertex.
    bool restricted_3d = false;
    /// Edge mode: values are squared lengths.
    bool squared = false;
};

enum class TestStage { accepted, screen, membership, rank, realization };
std::string to_string(TestStage stage);

struct BaseTest {
    std::optional<Configuration> simplex;  // canonical pose
    double scale = 1.0;
    TestStage stage = TestStage::screen;
    double residual = 0.0;
    RationalRankReport rank;
};

/// Decide whether an ordered D-tuple is s * (the measurements of a d+2 point
/// simplex). Path/edge mode orders values by edge; loop mode follows the
/// canonical base walks (pings and triangles through vertex 0).
BaseTest test_base_tuple(const std::vector<double>& w, std::size_t d, MeasurementMode mode, int b,
                         const ReconstructionOptions& opts = {});

struct GrowthTest {
    std::optional<Eigen::VectorXd> point;
    TestStage stage = TestStage::screen;
    double residual = 0.0;
};

/// Place one new point from d+1 values measured against `base` (d+1 placed
/// points). Path mode: distances to base[0..d]. Loop mode: ping(base[0], x)
/// followed by triangles (base[0], base[k], x), k = 1..d.
GrowthTest test_growth_tuple(const Configuration& base, const std::vector<double>& w, MeasurementMode mode,
                             double scale, const ReconstructionOptions& opts = {});

struct Assignment {
    std::size_t value_index;   // position in the input data
    Walk walk;                 // in result vertex labels
    LengthFunctional functional;
};

struct ReconstructionDiagnostics {
    std::uint64_t base_tuples_screened = 0;
    std::uint64_t base_tests = 0;
    std::uint64_t bases_accepted = 0;
    std::uint64_t bases_skipped_duplicate = 0;
    std::uint64_t growth_tests = 0;
    std::uint64_t growth_accepted = 0;
    std::uint64_t rejected_membership = 0;
    std::uint64_t rejected_rank = 0;
    std::uint64_t rejected_realization = 0;
    std::size_t candidates = 0;
    std::size_t maximal_candidates = 0;
    std::size_t claimed_values = 0;
    std::size_t total_values = 0;
};

struct ReconstructionResult {
    std::size_t n = 0;
    Configuration configuration;
    MeasurementMode mode = MeasurementMode::path;
    /// Size of the returned candidate relative to the smallest maximal
    /// candidate (always 1 for the selected one; the data fix only ratios).
    double scale = 1.0;
    std::vector<Assignment> assignments;
    ReconstructionDiagnostics diagnostics;
};

/// Hypothesize-and-test reconstruction from an unlabeled multiset.
ReconstructionResult reconstruct(const UnlabeledDataSet& data, const ReconstructionOptions& opts = {});

/// All n(n-1)/2 edge lengths of K_n, shuffled.
ReconstructionResult reconstruct_edges_complete(const UnlabeledDataSet& data, std::size_t n,
                                                const ReconstructionOptions& opts = {});

}  // namespace unlabeled
