#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "unlabeled/geometry.hpp"

using namespace unlabeled;

namespace {

Eigen::MatrixXd random_orthogonal(std::size_t d, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXd m(d, d);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    return qr.householderQ();
}

double direct_distance(const Configuration& c, std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t k = 0; k < c.dimension(); ++k) {
        const double t = c.matrix()(k, i) - c.matrix()(k, j);
        s += t * t;
    }
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("edge order lists pairs by larger endpoint") {
    const std::vector<std::pair<std::size_t, std::size_t>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    for (std::size_t e = 0; e < expected.size(); ++e) {
        CHECK(edge_index(expected[e].first, expected[e].second) == e);
        CHECK(edge_index(expected[e].second, expected[e].first) == e);
        const Edge ed = edge_at(e);
        CHECK(ed.i == expected[e].first);
        CHECK(ed.j == expected[e].second);
    }
    for (std::size_t e = 0; e < 200; ++e) CHECK(edge_index(edge_at(e).i, edge_at(e).j) == e);
    CHECK(vertices_for_edge_count(15) == 6);
    CHECK_THROWS(vertices_for_edge_count(7));
}

TEST_CASE("edge lengths match direct distances") {
    const auto p = sample_pseudo_generic(7, 3, 4);
    const auto l = edge_lengths(p);
    const auto m = squared_edge_lengths(p);
    REQUIRE(l.size() == 21);
    for (std::size_t e = 0; e < l.size(); ++e) {
        const Edge ed = edge_at(e);
        CHECK(l[e] == doctest::Approx(direct_distance(p, ed.i, ed.j)).epsilon(1e-14));
        CHECK(m[e] == doctest::Approx(l[e] * l[e]).epsilon(1e-14));
    }
}

TEST_CASE("doubled gram uses the last point as origin") {
    const auto p = sample_pseudo_generic(4, 2, 9);
    const auto G = doubled_gram(squared_edge_lengths(p));
    REQUIRE(G.rows() == 3);
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            const double oracle = 2.0 * (p.point(k) - p.point(3)).dot(p.point(l) - p.point(3));
            CHECK(G(k, l) == doctest::Approx(oracle).epsilon(1e-12));
        }
}

TEST_CASE("pseudo-generic sampling is seeded and avoids coincidences") {
    const auto a = sample_pseudo_generic(6, 2, 17);
    const auto b = sample_pseudo_generic(6, 2, 17);
    const auto c = sample_pseudo_generic(6, 2, 18);
    CHECK(a.matrix() == b.matrix());
    CHECK(a.matrix() != c.matrix());
    CHECK(a.matrix().minCoeff() >= 0.0);
    CHECK(a.matrix().maxCoeff() <= 1.0);
    auto l = edge_lengths(a);
    std::sort(l.begin(), l.end());
    for (std::size_t i = 1; i < l.size(); ++i) CHECK(l[i] - l[i - 1] > 1e-9);
}

TEST_CASE("realize_simplex reproduces lengths in canonical pose") {
    for (std::size_t d : {2u, 3u}) {
        const auto p = sample_pseudo_generic(d + 2, d, 100 + d);
        const auto q = realize_simplex(squared_edge_lengths(p), d);
        REQUIRE(q.size() == d + 2);
        const auto lp = edge_lengths(p), lq = edge_lengths(q);
        for (std::size_t e = 0; e < lp.size(); ++e) CHECK(lq[e] == doctest::Approx(lp[e]).epsilon(1e-10));
        CHECK(q.point(0).norm() < 1e-12);
        for (std::size_t i = 1; i <= d; ++i)
            for (std::size_t k = i; k < d; ++k) CHECK(std::abs(q.matrix()(k, i)) < 1e-10);
    }
}

TEST_CASE("realize_simplex rejects impossible and too-high-rank data") {
    // Triangle inequality violated: 1 + 1 < 3.
    CHECK_THROWS_AS(realize_simplex({1.0, 1.0, 9.0}, 2), NotRealizable);
    // Regular tetrahedron needs three dimensions.
    CHECK_THROWS_AS(realize_simplex(std::vector<double>(6, 1.0), 2), RankTooHigh);
}

TEST_CASE("trilateration recovers (4,3) from a right triangle") {
    const Configuration base(2, {{0, 0}, {4, 0}, {0, 3}});
    const auto x = trilaterate_point(base, {25, 9, 16});
    CHECK(x(0) == doctest::Approx(4.0));
    CHECK(x(1) == doctest::Approx(3.0));
    CHECK_THROWS_AS(trilaterate_point(base, {25, 9, 17}), Inconsistent);
    const Configuration line(2, {{0, 0}, {1, 0}, {2, 0}});
    CHECK_THROWS_AS(trilaterate_point(line, {1, 0, 1}), DegenerateBase);
}

TEST_CASE("Procrustes residual of a square against its double") {
    const Configuration a(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto b = a.scaled(2.0);
    const auto res = align_congruent(a, b);
    // Closed form: center both, rmsd^2 = (|A|^2 + |B|^2 - 2 * sum of singular values of B^T A) / n.
    Eigen::MatrixXd A = a.matrix().colwise() - a.matrix().rowwise().mean();
    Eigen::MatrixXd B = b.matrix().colwise() - b.matrix().rowwise().mean();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(B * A.transpose());
    const double oracle = std::sqrt((A.squaredNorm() + B.squaredNorm() - 2 * svd.singularValues().sum()) / 4.0);
    CHECK(oracle == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(res.residual_rmsd == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("alignment undoes rotations, reflections and translations") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
        const auto p = sample_pseudo_generic(6, d, static_cast<std::uint64_t>(t));
        const Eigen::MatrixXd Q = random_orthogonal(d, rng);
        const Eigen::VectorXd shift = Eigen::VectorXd::Random(static_cast<Eigen::Index>(d));
        const Configuration q(Eigen::MatrixXd((Q * p.matrix()).colwise() + shift));
        const auto res = align_congruent(p, q);
        CHECK(res.residual_rmsd < 1e-12);
        CHECK((res.orthogonal - Q).norm() < 1e-10);
    }
}

TEST_CASE("canonical pose is congruent and upper triangular") {
    const auto p = sample_pseudo_generic(5, 3, 21);
    const auto c = canonical_pose(p);
    const auto lp = edge_lengths(p), lc = edge_lengths(c);
    for (std::size_t e = 0; e < lp.size(); ++e) CHECK(lc[e] == doctest::Approx(lp[e]).epsilon(1e-12));
    CHECK(c.point(0).norm() < 1e-14);
    CHECK(std::abs(c.matrix()(1, 1)) < 1e-12);
    CHECK(std::abs(c.matrix()(2, 1)) < 1e-12);
    CHECK(std::abs(c.matrix()(2, 2)) < 1e-12);
    CHECK(c.matrix()(0, 1) > 0);
    CHECK(c.matrix()(1, 2) > 0);
    CHECK(c.matrix()(2, 3) > 0);
}

TEST_CASE("congruence matching finds the hidden relabeling") {
    std::mt19937_64 rng(8);
    const auto p = sample_pseudo_generic(7, 2, 33);
    std::vector<std::size_t> perm{3, 0, 6, 1, 5, 2, 4};
    const Eigen::MatrixXd Q = random_orthogonal(2, rng);
    Eigen::MatrixXd moved(2, 7);
    for (std::size_t i = 0; i < 7; ++i) moved.col(static_cast<Eigen::Index>(i)) = Q * p.point(perm[i]);
    const Configuration q(moved);
    const auto found = match_congruent(q, p);
    REQUIRE(found);
    CHECK(*found == perm);
    CHECK_FALSE(match_congruent(q, p.scaled(1.01)));
}

TEST_CASE("similar subconfigurations are located with their scale") {
    const auto p = sample_pseudo_generic(6, 2, 44);
    const auto probe = p.subset({4, 1, 2, 5}).scaled(0.5);
    const auto matches = find_similar_subconfigurations(p, probe);
    bool hit = false;
    for (const auto& m : matches) {
        if (m.indices == std::vector<std::size_t>{4, 1, 2, 5}) {
            hit = true;
            CHECK(m.scale == doctest::Approx(2.0).epsilon(1e-9));
        }
    }
    CHECK(hit);
}
