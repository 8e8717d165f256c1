#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace unlabeled {

// Edge {i,j} (0-based, i<j) in the fixed order 01,02,12,03,13,23,...
// i.e. sorted by the larger endpoint first.
inline std::size_t edge_index(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

inline std::size_t edge_count(std::size_t n) { return n * (n - 1) / 2; }

struct Edge {
    std::size_t i;
    std::size_t j;
};

// Inverse of edge_index.
Edge edge_at(std::size_t index);

// Number of vertices n with n(n-1)/2 == count; throws if count is not triangular.
std::size_t vertices_for_edge_count(std::size_t count);

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotRealizable : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class RankTooHigh : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class DegenerateBase : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class Inconsistent : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class SizeMismatch : public GeometryError {
public:
    using GeometryError::GeometryError;
};

class ResampleExhausted : public GeometryError {
public:
    using GeometryError::GeometryError;
};

/// An ordered list of n points in R^d, stored column-wise (d x n).
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(Eigen::MatrixXd points);
    Configuration(std::size_t dimension, const std::vector<std::vector<double>>& points);

    std::size_t dimension() const { return static_cast<std::size_t>(points_.rows()); }
    std::size_t size() const { return static_cast<std::size_t>(points_.cols()); }

    Eigen::VectorXd point(std::size_t i) const { return points_.col(static_cast<Eigen::Index>(i)); }
    const Eigen::MatrixXd& matrix() const { return points_; }

    double distance(std::size_t i, std::size_t j) const;

    Configuration subset(const std::vector<std::size_t>& indices) const;
    Configuration scaled(double factor) const;
    Configuration with_point(const Eigen::VectorXd& p) const;

    std::vector<std::vector<double>> to_rows() const;

private:
    Eigen::MatrixXd points_;
};

struct AlignmentResult {
    Eigen::MatrixXd orthogonal;  // d x d, maps a onto b: b ~ Q a + t
    Eigen::VectorXd translation;
    double residual_rmsd = 0.0;
};

struct SimilarMatch {
    std::vector<std::size_t> indices;
    double scale = 1.0;  // config distances = scale * probe distances
};

/// l(p): Euclidean lengths over all edges in edge order.
std::vector<double> edge_lengths(const Configuration& config);

/// m(p): squared lengths over all edges in edge order.
std::vector<double> squared_edge_lengths(const Configuration& config);

/// Gram-type matrix of an n-point squared-length vector with the last point
/// as origin: G_kk = 2 m_{k,n}, G_kl = m_{k,n} + m_{l,n} - m_{kl}.
/// This is twice the usual Gram matrix.
Eigen::MatrixXd doubled_gram(const std::vector<double>& squared_lengths);

/// Seeded uniform sampling in [0, box]^d with rejection of near-degenerate
/// draws (repeated distances, affinely dependent (d+1)-subsets).
Configuration sample_pseudo_generic(std::size_t n, std::size_t d, std::uint64_t seed,
                                    double box = 1.0);

/// Classical MDS realization of a squared-length vector in R^d, returned in
/// canonical pose.
Configuration realize_simplex(const std::vector<double>& squared_lengths, std::size_t d,
                              double tol = 1e-9);

/// Unique point at the given squared distances from d+1 affinely spanning points.
Eigen::VectorXd trilaterate_point(const Configuration& base,
                                  const std::vector<double>& squared_dists,
                                  double tol = 1e-8);

/// Least-squares congruence (rotations and reflections allowed) taking a onto b.
AlignmentResult align_congruent(const Configuration& a, const Configuration& b);

/// First point at the origin, then successive points on the positive half of
/// successive axes (upper triangular coordinates with non-negative diagonal).
Configuration canonical_pose(const Configuration& config);

/// Every ordered index sequence I with config_I similar to probe.
std::vector<SimilarMatch> find_similar_subconfigurations(const Configuration& config,
                                                         const Configuration& probe,
                                                         double tol = 1e-9);

/// A bijection perm with a.point(i) ~ b.point(perm[i]) up to congruence, if any.
std::optional<std::vector<std::size_t>> match_congruent(const Configuration& a,
                                                         const Configuration& b,
                                                         double tol = 1e-7);

}  // namespace unlabeled
