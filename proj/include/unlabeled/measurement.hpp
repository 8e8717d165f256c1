#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "unlabeled/geometry.hpp"

namespace unlabeled {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

enum class WalkKind { path, loop };
enum class MeasurementMode { path, loop, edge };

std::string to_string(MeasurementMode mode);
MeasurementMode parse_mode(const std::string& name);

class IndexOutOfRange : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A vertex sequence with no immediate repeats; a loop when it closes on
/// itself. Equality is equality of edge multisets.
class Walk {
public:
    explicit Walk(std::vector<std::size_t> vertices);

    static Walk ping(std::size_t i, std::size_t j) { return Walk({i, j, i}); }
    static Walk triangle(std::size_t i, std::size_t j, std::size_t k) { return Walk({i, j, k, i}); }
    static Walk edge(std::size_t i, std::size_t j) { return Walk({i, j}); }

    WalkKind kind() const { return kind_; }
    const std::vector<std::size_t>& vertices() const { return vertices_; }
    std::size_t max_vertex() const;

    /// (edge index, multiplicity) pairs sorted by edge index.
    const std::vector<std::pair<std::size_t, int>>& edges() const { return edges_; }
    int max_multiplicity() const;
    bool is_bounded(int b) const { return max_multiplicity() <= b; }

    /// Same edges with s times the multiplicity.
    Walk scaled(int s) const;

    friend bool operator==(const Walk& a, const Walk& b) { return a.edges_ == b.edges_; }

private:
    std::vector<std::size_t> vertices_;
    std::vector<std::pair<std::size_t, int>> edges_;
    WalkKind kind_;
};

/// Integer coefficients over the edges of K_n.
class LengthFunctional {
public:
    LengthFunctional() = default;
    LengthFunctional(std::size_t n, std::vector<std::int64_t> coefficients);

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::int64_t>& coefficients() const { return coeffs_; }
    std::int64_t operator[](std::size_t edge) const { return coeffs_[edge]; }

    std::int64_t bound() const;
    bool is_bounded(std::int64_t b) const { return bound() <= b; }
    bool is_whole() const;

    double apply(const std::vector<double>& lengths) const;
    double apply(const Configuration& config) const { return apply(edge_lengths(config)); }

    /// Coefficients after relabeling vertex v as perm[v].
    LengthFunctional relabeled(const std::vector<std::size_t>& perm, std::size_t new_n) const;

    friend bool operator==(const LengthFunctional& a, const LengthFunctional& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> coeffs_;
};

LengthFunctional walk_to_functional(const Walk& w, std::size_t n);

struct MeasurementEnsemble {
    MeasurementMode mode = MeasurementMode::path;
    std::size_t n = 0;
    std::vector<Walk> walks;

    std::vector<LengthFunctional> functionals() const;
    std::int64_t bound() const;
};

/// A multiset of measurement values. The order of `values` carries no
/// information about which walk produced which value.
struct UnlabeledDataSet {
    std::vector<double> values;
    std::size_t dimension = 2;
    int bound = 1;
    MeasurementMode mode = MeasurementMode::path;
};

/// Values in ensemble order.
std::vector<double> evaluate_ordered(const MeasurementEnsemble& ensemble, const Configuration& config);

/// Permutation used to shuffle k values under a seed: output[p] = input[perm[p]].
std::vector<std::size_t> shuffle_permutation(std::size_t k, std::uint64_t seed);

UnlabeledDataSet evaluate(const MeasurementEnsemble& ensemble, const Configuration& config,
                          std::uint64_t seed);

enum class CanonicalKind { base, trilat };

/// The D walks measured by the canonical matrices on vertices 0..d+1, with
/// vertex 0 as the anchor of every ping and triangle.
std::vector<Walk> canonical_walks(CanonicalKind kind, std::size_t d);

/// N^d_1 (base: pings and triangles through vertex 0) or N^d_2
/// (trilateration: the C base edges, one ping, d triangles).
IntMatrix canonical_matrix(CanonicalKind kind, std::size_t d);

/// Stack functionals into a k x N matrix.
IntMatrix ensemble_matrix(const std::vector<LengthFunctional>& functionals);

struct EnsembleOptions {
    /// Every ping and triangle passes through one anchor vertex (d=3 restricted setting).
    bool restricted_through_anchor = false;
};

/// An ensemble that allows trilateration under a seed-chosen vertex order,
/// followed by `extra` distinct random b-bounded walks of the same kind.
MeasurementEnsemble build_trilateration_ensemble(std::size_t n, std::size_t d, MeasurementMode mode,
                                                 std::size_t extra, int b, std::uint64_t seed,
                                                 const EnsembleOptions& options = {});

}  // namespace unlabeled
