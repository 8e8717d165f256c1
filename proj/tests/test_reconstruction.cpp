#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"

using namespace unlabeled;
using namespace testing_support;

namespace {

// The 24 coordinate permutations of K_4 edges induced by vertex relabelings.
std::set<std::vector<std::size_t>> induced_edge_permutations() {
    std::set<std::vector<std::size_t>> out;
    std::vector<std::size_t> v{0, 1, 2, 3};
    do {
        std::vector<std::size_t> e(6);
        for (std::size_t k = 0; k < 6; ++k) e[k] = edge_index(v[edge_at(k).i], v[edge_at(k).j]);
        out.insert(e);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

double path_length(const std::vector<Eigen::Vector2d>& pts, const std::vector<int>& seq) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) s += (pts[static_cast<std::size_t>(seq[i])] - pts[static_cast<std::size_t>(seq[i + 1])]).norm();
    return s;
}

}  // namespace

TEST_CASE("veridical base tuples are accepted and realized") {
    const auto p = sample_pseudo_generic(4, 2, 10);
    const auto l = edge_lengths(p);
    const auto t = test_base_tuple(l, 2, MeasurementMode::path, 2);
    REQUIRE(t.stage == TestStage::accepted);
    CHECK(congruent_match(*t.simplex, p)->rmsd < 1e-12);

    std::vector<double> loop(6);
    const auto N = canonical_matrix(CanonicalKind::base, 2);
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) loop[static_cast<std::size_t>(r)] += static_cast<double>(N(r, c)) * l[static_cast<std::size_t>(c)];
    const auto tl = test_base_tuple(loop, 2, MeasurementMode::loop, 2);
    REQUIRE(tl.stage == TestStage::accepted);
    CHECK(congruent_match(*tl.simplex, p)->rmsd < 1e-12);
}

TEST_CASE("wrong orders of a generic tuple are rejected") {
    const auto relabelings = induced_edge_permutations();
    REQUIRE(relabelings.size() == 24);
    std::mt19937_64 rng(12);
    int tested = 0;
    for (std::uint64_t s = 0; tested < 500; ++s) {
        const auto l = edge_lengths(sample_pseudo_generic(4, 2, s));
        std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
        std::shuffle(perm.begin(), perm.end(), rng);
        if (relabelings.count(perm)) continue;
        std::vector<double> w(6);
        for (std::size_t k = 0; k < 6; ++k) w[k] = l[perm[k]];
        const auto t = test_base_tuple(w, 2, MeasurementMode::path, 2);
        CHECK(t.stage != TestStage::accepted);
        ++tested;
    }
}

TEST_CASE("the 3-4-5 family fails only the rank stage") {
    for (double t : {0.5, 1.0, 2.75}) {
        std::vector<double> w{3 * t, 4 * t, 5 * t, 5 * t, 4 * t, 3 * t};
        const auto r = test_base_tuple(w, 2, MeasurementMode::path, 2);
        CHECK(r.stage == TestStage::rank);
        CHECK(r.residual < 1e-12);
    }
}

TEST_CASE("growth in loop mode recovers (4,3)") {
    const std::vector<Eigen::Vector2d> pts{{0, 0}, {4, 0}, {0, 3}, {4, 3}};
    // Anchor 0, apex 3: one ping and two triangles.
    const double ping = path_length(pts, {0, 3, 0});
    const double t1 = path_length(pts, {0, 1, 3, 0});
    const double t2 = path_length(pts, {0, 2, 3, 0});
    CHECK(ping == doctest::Approx(10.0));
    CHECK(t1 == doctest::Approx(12.0));
    const Configuration base(2, {{0, 0}, {4, 0}, {0, 3}});
    const auto g = test_growth_tuple(base, {ping, t1, t2}, MeasurementMode::loop, 1.0);
    REQUIRE(g.point);
    CHECK((*g.point)(0) == doctest::Approx(4.0));
    CHECK((*g.point)(1) == doctest::Approx(3.0));
    const auto doubled = test_growth_tuple(base.scaled(2.0), {2 * ping, 2 * t1, 2 * t2}, MeasurementMode::loop, 2.0);
    CHECK_FALSE(doubled.point);

    const auto path = test_growth_tuple(base, {5, 3, 4}, MeasurementMode::path, 1.0);
    REQUIRE(path.point);
    CHECK((*path.point)(0) == doctest::Approx(4.0));
    CHECK((*path.point)(1) == doctest::Approx(3.0));
}

TEST_CASE("a perturbed ping is rejected by membership") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto p = sample_pseudo_generic(4, 2, s);
        const auto base = p.subset({0, 1, 2});
        const double ping = 2 * p.distance(0, 3);
        const double t1 = p.distance(0, 1) + p.distance(1, 3) + p.distance(3, 0);
        const double t2 = p.distance(0, 2) + p.distance(2, 3) + p.distance(3, 0);
        REQUIRE(test_growth_tuple(base, {ping, t1, t2}, MeasurementMode::loop, 1.0).point);
        const auto bad = test_growth_tuple(base, {1.05 * ping, t1, t2}, MeasurementMode::loop, 1.0);
        CHECK(bad.stage != TestStage::accepted);
    }
}

TEST_CASE("reconstruction of a loop dataset") {
    const auto sim = simulate({6, 2, MeasurementMode::loop, 2, 3, 11, false});
    const auto r = reconstruct(sim.data);
    REQUIRE(r.n == 6);
    const auto m = congruent_match(r.configuration, sim.sidecar.configuration);
    REQUIRE(m);
    CHECK(m->rmsd < 1e-7);
    CHECK(labels_recovered(r, sim.sidecar, m->perm));
    CHECK(soundness_error(r, sim.data) < 1e-7);
    CHECK(r.diagnostics.total_values == 6 + 3 * 2 + 3);
    CHECK(r.diagnostics.claimed_values == 12);
    CHECK(r.scale == doctest::Approx(1.0));
}

TEST_CASE("scaled ensembles and the smallest-scale rule") {
    const auto p = sample_pseudo_generic(6, 2, 5);
    const auto ens = build_trilateration_ensemble(6, 2, MeasurementMode::loop, 0, 2, 5);
    MeasurementEnsemble doubled = ens;
    for (auto& w : doubled.walks) w = w.scaled(2);
    const auto once = evaluate_ordered(ens, p);
    const auto twice = evaluate_ordered(doubled, p);

    UnlabeledDataSet only2{twice, 2, 4, MeasurementMode::loop};
    const auto r2 = reconstruct(only2);
    REQUIRE(r2.n == 6);
    CHECK(congruent_match(r2.configuration, p.scaled(2.0))->rmsd < 1e-7);

    UnlabeledDataSet both{once, 2, 4, MeasurementMode::loop};
    both.values.insert(both.values.end(), twice.begin(), twice.end());
    const auto r = reconstruct(both);
    REQUIRE(r.n == 6);
    CHECK(congruent_match(r.configuration, p)->rmsd < 1e-7);
    CHECK(r.diagnostics.maximal_candidates >= 2);
}

TEST_CASE("edge mode from complete edge sets") {
    for (std::size_t n : {5u, 6u}) {
        const auto p = sample_pseudo_generic(n, 2, n);
        auto l = edge_lengths(p);
        std::shuffle(l.begin(), l.end(), std::mt19937_64(n));
        const auto r = reconstruct_edges_complete({l, 2, 1, MeasurementMode::edge}, n);
        REQUIRE(r.n == n);
        CHECK(congruent_match(r.configuration, p)->rmsd < 1e-7);

        auto m = squared_edge_lengths(p);
        std::shuffle(m.begin(), m.end(), std::mt19937_64(n + 1));
        ReconstructionOptions sq;
        sq.squared = true;
        CHECK(congruent_match(reconstruct_edges_complete({m, 2, 1, MeasurementMode::edge}, n, sq).configuration, p)->rmsd < 1e-7);
    }
    CHECK_THROWS_AS(reconstruct_edges_complete({std::vector<double>(9, 1.0), 2, 1, MeasurementMode::edge}, 5), SizeMismatch);
}

TEST_CASE("edge data with a value removed yields at most a subconfiguration") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto p = sample_pseudo_generic(6, 2, s);
        auto l = edge_lengths(p);
        l.erase(l.begin() + static_cast<std::ptrdiff_t>(s % l.size()));
        try {
            const auto r = reconstruct({l, 2, 1, MeasurementMode::edge});
            const auto matches = find_similar_subconfigurations(p, r.configuration, 1e-7);
            CHECK(std::any_of(matches.begin(), matches.end(),
                              [](const SimilarMatch& m) { return std::abs(m.scale - 1.0) < 1e-7; }));
        } catch (const NoBaseFound&) {
        }
    }
}

TEST_CASE("refusals and failures") {
    UnlabeledDataSet line{{5.0, 3.0, 8.0}, 1, 2, MeasurementMode::path};
    CHECK_THROWS_AS(reconstruct(line), UnsupportedDimension);
    try {
        reconstruct(line);
    } catch (const UnsupportedDimension& e) {
        CHECK(std::string(e.what()).find("d = 1") != std::string::npos);
    }
    const auto sim3 = simulate({5, 3, MeasurementMode::loop, 2, 0, 1, true});
    CHECK_THROWS_AS(reconstruct(sim3.data), UnsupportedDimension);
    ReconstructionOptions r3;
    r3.restricted_3d = true;
    CHECK(reconstruct(sim3.data, r3).n == 5);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.1, 1.0);
    std::vector<double> junk(12);
    for (auto& x : junk) x = u(rng);
    CHECK_THROWS_AS(reconstruct({junk, 2, 2, MeasurementMode::path}), NoBaseFound);
    CHECK_THROWS_AS(reconstruct({{1.0, 2.0}, 2, 2, MeasurementMode::path}), NoBaseFound);
}
