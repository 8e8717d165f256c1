#include "unlabeled/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

namespace unlabeled {

Edge edge_at(std::size_t index) {
    std::size_t j = 1;
    while ((j + 1) * j / 2 <= index) ++j;
    return Edge{index - j * (j - 1) / 2, j};
}

std::size_t vertices_for_edge_count(std::size_t count) {
    std::size_t n = 1;
    while (edge_count(n) < count) ++n;
    if (edge_count(n) != count) {
        throw std::invalid_argument("edge vector length " + std::to_string(count) +
                                    " is not a triangular number");
    }
    return n;
}

Configuration::Configuration(Eigen::MatrixXd points) : points_(std::move(points)) {
    if (points_.rows() < 1) throw std::invalid_argument("configuration dimension must be >= 1");
    if (points_.cols() < 1) throw std::invalid_argument("configuration needs at least one point");
}

Configuration::Configuration(std::size_t dimension, const std::vector<std::vector<double>>& points) {
    if (dimension < 1) throw std::invalid_argument("configuration dimension must be >= 1");
    if (points.empty()) throw std::invalid_argument("configuration needs at least one point");
    points_.resize(static_cast<Eigen::Index>(dimension), static_cast<Eigen::Index>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dimension) {
            throw std::invalid_argument("point " + std::to_string(i) + " has " +
                                        std::to_string(points[i].size()) + " coordinates, expected " +
                                        std::to_string(dimension));
        }
        for (std::size_t k = 0; k < dimension; ++k) {
            points_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) = points[i][k];
        }
    }
}

double Configuration::distance(std::size_t i, std::size_t j) const {
    return (points_.col(static_cast<Eigen::Index>(i)) - points_.col(static_cast<Eigen::Index>(j))).norm();
}

Configuration Configuration::subset(const std::vector<std::size_t>& indices) const {
    Eigen::MatrixXd sub(points_.rows(), static_cast<Eigen::Index>(indices.size()));
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= size()) throw std::out_of_range("subset index out of range");
        sub.col(static_cast<Eigen::Index>(k)) = points_.col(static_cast<Eigen::Index>(indices[k]));
    }
    return Configuration(std::move(sub));
}

Configuration Configuration::scaled(double factor) const { return Configuration(points_ * factor); }

Configuration Configuration::with_point(const Eigen::VectorXd& p) const {
    if (p.size() != points_.rows()) throw SizeMismatch("point dimension mismatch");
    Eigen::MatrixXd grown(points_.rows(), points_.cols() + 1);
    grown << points_, p;
    return Configuration(std::move(grown));
}

std::vector<std::vector<double>> Configuration::to_rows() const {
    std::vector<std::vector<double>> rows(size(), std::vector<double>(dimension()));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t k = 0; k < dimension(); ++k)
            rows[i][k] = points_(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i));
    return rows;
}

std::vector<double> squared_edge_lengths(const Configuration& config) {
    const std::size_t n = config.size();
    std::vector<double> m(edge_count(n));
    const auto& P = config.matrix();
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            m[edge_index(i, j)] =
                (P.col(static_cast<Eigen::Index>(i)) - P.col(static_cast<Eigen::Index>(j))).squaredNorm();
    return m;
}

std::vector<double> edge_lengths(const Configuration& config) {
    auto l = squared_edge_lengths(config);
    for (auto& x : l) x = std::sqrt(x);
    return l;
}

Eigen::MatrixXd doubled_gram(const std::vector<double>& m) {
    const std::size_t n = vertices_for_edge_count(m.size());
    if (n < 2) return Eigen::MatrixXd(0, 0);
    const std::size_t last = n - 1;
    Eigen::MatrixXd G(static_cast<Eigen::Index>(last), static_cast<Eigen::Index>(last));
    for (std::size_t k = 0; k < last; ++k) {
        const double mk = m[edge_index(k, last)];
        G(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = 2.0 * mk;
        for (std::size_t l = k + 1; l < last; ++l) {
            const double v = mk + m[edge_index(l, last)] - m[edge_index(k, l)];
            G(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) = v;
            G(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(k)) = v;
        }
    }
    return G;
}

namespace {

// Smallest singular value of the d x k difference matrix of the given points.
double min_spread(const Eigen::MatrixXd& P, const std::vector<std::size_t>& idx) {
    Eigen::MatrixXd D(P.rows(), static_cast<Eigen::Index>(idx.size() - 1));
    for (std::size_t k = 1; k < idx.size(); ++k)
        D.col(static_cast<Eigen::Index>(k - 1)) =
            P.col(static_cast<Eigen::Index>(idx[k])) - P.col(static_cast<Eigen::Index>(idx[0]));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(D);
    const auto& s = svd.singularValues();
    return s.size() == 0 ? 0.0 : s(s.size() - 1);
}

bool affinely_generic(const Eigen::MatrixXd& P, std::size_t d, double threshold) {
    const std::size_t n = static_cast<std::size_t>(P.cols());
    const std::size_t k = std::min(n, d + 1);
    if (k < 2) return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    // Walk all k-subsets in lexicographic order.
    while (true) {
        if (min_spread(P, idx) <= threshold) return false;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) return true;
        ++idx[pos - 1];
        for (std::size_t t = pos; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
}

bool distances_distinct(const std::vector<double>& l, double rel, double floor) {
    std::vector<double> sorted = l;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() <= floor) return false;
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] - sorted[i - 1] <= rel * sorted[i]) return false;
    return true;
}

}  // namespace

Configuration sample_pseudo_generic(std::size_t n, std::size_t d, std::uint64_t seed, double box) {
    if (n < 1 || d < 1) throw std::invalid_argument("sample_pseudo_generic needs n >= 1 and d >= 1");
    if (!(box > 0.0)) throw std::invalid_argument("sampling box must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(0.0, box);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Eigen::MatrixXd P(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n));
        for (Eigen::Index i = 0; i < P.cols(); ++i)
            for (Eigen::Index k = 0; k < P.rows(); ++k) P(k, i) = coord(rng);
        Configuration c(P);
        if (!distances_distinct(edge_lengths(c), 1e-6, 1e-9 * box)) continue;
        if (!affinely_generic(P, d, 1e-9 * box)) continue;
        return c;
    }
    throw ResampleExhausted("no admissible configuration after 100 attempts");
}

Configuration canonical_pose(const Configuration& config) {
    const auto& P = config.matrix();
    const Eigen::Index d = P.rows();
    const Eigen::Index n = P.cols();
    if (n == 1) return Configuration(Eigen::MatrixXd::Zero(d, 1));
    Eigen::MatrixXd D = P.rightCols(n - 1).colwise() - P.col(0);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(D);
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < std::min(d, n - 1); ++k)
        if (R(k, k) < 0) R.row(k) *= -1.0;
    Eigen::MatrixXd out(d, n);
    out.col(0).setZero();
    out.rightCols(n - 1) = R;
    return Configuration(std::move(out));
}

Configuration realize_simplex(const std::vector<double>& squared_lengths, std::size_t d, double tol) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    const std::size_t n = vertices_for_edge_count(squared_lengths.size());
    if (n < 2) return Configuration(Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n)));
    const Eigen::MatrixXd G = 0.5 * doubled_gram(squared_lengths);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(G);
    const Eigen::VectorXd& lambda = eig.eigenvalues();  // ascending
    const double scale = std::max(lambda.cwiseAbs().maxCoeff(), 1e-300);
    if (lambda(0) < -tol * scale) {
        throw NotRealizable("Gram matrix has negative eigenvalue " + std::to_string(lambda(0)));
    }
    const Eigen::Index m = lambda.size();
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < m; ++k)
        if (lambda(k) > tol * scale) ++rank;
    if (rank > static_cast<Eigen::Index>(d)) {
        throw RankTooHigh("Gram matrix rank " + std::to_string(rank) + " exceeds dimension " +
                          std::to_string(d));
    }
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(n));
    const Eigen::Index used = std::min<Eigen::Index>(static_cast<Eigen::Index>(d), m);
    for (Eigen::Index k = 0; k < used; ++k) {
        const Eigen::Index src = m - 1 - k;
        const double root = std::sqrt(std::max(lambda(src), 0.0));
        P.row(k).head(m) = root * eig.eigenvectors().col(src).transpose();
    }
    return canonical_pose(Configuration(std::move(P)));
}

Eigen::VectorXd trilaterate_point(const Configuration& base, const std::vector<double>& squared_dists,
                                  double tol) {
    const std::size_t d = base.dimension();
    if (base.size() != d + 1 || squared_dists.size() != d + 1) {
        throw SizeMismatch("trilateration needs d+1 base points and d+1 distances");
    }
    const auto& B = base.matrix();
    const Eigen::VectorXd b0 = B.col(0);
    Eigen::MatrixXd A(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(d));
    double scale = squared_dists[0];
    for (std::size_t k = 1; k <= d; ++k) {
        const Eigen::VectorXd bk = B.col(static_cast<Eigen::Index>(k));
        const Eigen::VectorXd diff = bk - b0;
        A.row(static_cast<Eigen::Index>(k - 1)) = 2.0 * diff.transpose();
        rhs(static_cast<Eigen::Index>(k - 1)) =
            diff.dot(bk + b0) - squared_dists[k] + squared_dists[0];
        scale = std::max({scale, squared_dists[k], diff.squaredNorm()});
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s(s.size() - 1) <= 1e-12 * s(0) || s(0) == 0.0) {
        throw DegenerateBase("trilateration base does not span the space");
    }
    const Eigen::VectorXd x = svd.solve(rhs);
    const double residual = std::abs((x - b0).squaredNorm() - squared_dists[0]);
    if (residual > tol * scale) {
        throw Inconsistent("distances fit no point (relative residual " +
                           std::to_string(residual / scale) + ")");
    }
    return x;
}

AlignmentResult align_congruent(const Configuration& a, const Configuration& b) {
    if (a.size() != b.size() || a.dimension() != b.dimension()) {
        throw SizeMismatch("alignment needs configurations of equal size and dimension");
    }
    const Eigen::VectorXd ca = a.matrix().rowwise().mean();
    const Eigen::VectorXd cb = b.matrix().rowwise().mean();
    const Eigen::MatrixXd A = a.matrix().colwise() - ca;
    const Eigen::MatrixXd B = b.matrix().colwise() - cb;
    const Eigen::MatrixXd H = A * B.transpose();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(H, Eigen::ComputeFullU | Eigen::ComputeFullV);
    AlignmentResult out;
    out.orthogonal = svd.matrixV() * svd.matrixU().transpose();
    out.translation = cb - out.orthogonal * ca;
    const Eigen::MatrixXd moved = (out.orthogonal * a.matrix()).colwise() + out.translation;
    out.residual_rmsd = std::sqrt((moved - b.matrix()).squaredNorm() / static_cast<double>(a.size()));
    return out;
}

namespace {

Eigen::MatrixXd distance_table(const Configuration& c) {
    const auto n = static_cast<Eigen::Index>(c.size());
    Eigen::MatrixXd D(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            D(i, j) = (c.matrix().col(i) - c.matrix().col(j)).norm();
    return D;
}

}  // namespace

std::vector<SimilarMatch> find_similar_subconfigurations(const Configuration& config,
                                                         const Configuration& probe, double tol) {
    const std::size_t k = probe.size();
    const std::size_t n = config.size();
    if (k < 3) throw std::invalid_argument("similarity probe needs at least 3 points");
    std::vector<SimilarMatch> out;
    if (k > n) return out;
    const Eigen::MatrixXd Dc = distance_table(config);
    const Eigen::MatrixXd Dp = distance_table(probe);
    const double probe_diam = Dp.maxCoeff();
    if (Dp(0, 1) <= 0.0) return out;

    std::vector<std::size_t> seq;
    std::vector<bool> used(n, false);
    double scale = 0.0;
    std::function<void()> extend = [&]() {
        const std::size_t t = seq.size();
        if (t == k) {
            out.push_back({seq, scale});
            return;
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            if (t == 1) {
                scale = Dc(static_cast<Eigen::Index>(seq[0]), static_cast<Eigen::Index>(c)) / Dp(0, 1);
                if (!(scale > 0.0)) continue;
            }
            bool ok = true;
            for (std::size_t u = 0; u < t && ok; ++u) {
                const double want = scale * Dp(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(u));
                const double got = Dc(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(seq[u]));
                ok = std::abs(got - want) <= tol * scale * probe_diam;
            }
            if (!ok) continue;
            used[c] = true;
            seq.push_back(c);
            extend();
            seq.pop_back();
            used[c] = false;
        }
    };
    extend();
    return out;
}

std::optional<std::vector<std::size_t>> match_congruent(const Configuration& a, const Configuration& b,
                                                         double tol) {
    if (a.size() != b.size() || a.dimension() != b.dimension()) return std::nullopt;
    const std::size_t n = a.size();
    const Eigen::MatrixXd Da = distance_table(a);
    const Eigen::MatrixXd Db = distance_table(b);
    const double slack = tol * std::max(Db.maxCoeff(), 1e-300);
    std::vector<std::size_t> perm;
    std::vector<bool> used(n, false);
    std::function<bool()> extend = [&]() -> bool {
        const std::size_t t = perm.size();
        if (t == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (std::size_t u = 0; u < t && ok; ++u)
                ok = std::abs(Da(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(u)) -
                              Db(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(perm[u]))) <= slack;
            if (!ok) continue;
            used[c] = true;
            perm.push_back(c);
            if (extend()) return true;
            perm.pop_back();
            used[c] = false;
        }
        return false;
    };
    if (!extend()) return std::nullopt;
    return perm;
}

}  // namespace unlabeled
