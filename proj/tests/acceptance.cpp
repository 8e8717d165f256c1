// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "unlabeled/symmetry_group.hpp"
#include "unlabeled/variety.hpp"

using namespace unlabeled;
using namespace testing_support;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << " " << name << ": " << detail << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void group_orders(const std::vector<GroupElement>& full) {
    const auto t0 = Clock::now();
    const auto signs = close_group(standard_generators(false), Quotient::sign_and_scale).size();
    const auto pos = close_group(standard_generators(false), Quotient::positive_scale).size();
    const auto full_signs = close_group(standard_generators(true), Quotient::sign_and_scale).size();
    const auto nonneg = filter_nonnegative(full).size();
    std::ostringstream d;
    d << "relabelings+flips " << signs << " up to sign and scale (" << pos << " up to positive scale, -I is a product of flips)"
      << ", with Regge " << full.size() << " positive-scale / " << full_signs << " sign-and-scale, non-negative " << nonneg
      << ", " << seconds_since(t0) << " s";
    report(1, "group orders", signs == 768 && pos == 1536 && full.size() == 23040 && full_signs == 11520 && nonneg == 24,
           d.str());
}

void canonical_compositions(const std::vector<GroupElement>& full) {
    const auto n1 = RationalMatrix::from_integers(canonical_matrix(CanonicalKind::base, 2));
    const auto n2 = RationalMatrix::from_integers(canonical_matrix(CanonicalKind::trilat, 2));
    const auto a = check_canonical_nonneg_compositions(full, n1);
    const auto b = check_canonical_nonneg_compositions(full, n2);
    std::vector<std::string> perms;
    for (const auto& P : all_vertex_relabelings()) perms.push_back(canonicalize(P, Quotient::positive_scale).to_string());
    std::sort(perms.begin(), perms.end());
    auto are_relabelings = [&](const std::vector<GroupElement>& v) {
        std::vector<std::string> got;
        for (const auto& e : v) got.push_back(e.matrix.to_string());
        std::sort(got.begin(), got.end());
        return got == perms;
    };
    std::ostringstream d;
    d << "N1*A non-negative for " << a.size() << ", N2*A for " << b.size() << " of " << full.size();
    report(2, "canonical non-negativity", are_relabelings(a) && are_relabelings(b), d.str());
}

void end_to_end() {
    std::size_t total = 0, good = 0;
    double worst_rmsd = 0.0, worst_time = 0.0;
    std::string first_failure;
    for (std::size_t n = 4; n <= 8; ++n)
        for (auto mode : {MeasurementMode::path, MeasurementMode::loop})
            for (int b : {2, 3})
                for (std::uint64_t seed = 0; seed < 50; ++seed) {
                    ++total;
                    const auto sim = simulate({n, 2, mode, b, 3, 1000 * n + seed, false});
                    const auto t0 = Clock::now();
                    bool ok = false;
                    try {
                        const auto r = reconstruct(sim.data);
                        const double dt = seconds_since(t0);
                        worst_time = std::max(worst_time, dt);
                        const auto m = congruent_match(r.configuration, sim.sidecar.configuration);
                        if (m) worst_rmsd = std::max(worst_rmsd, m->rmsd);
                        ok = r.n == n && m && m->rmsd < 1e-7 && labels_recovered(r, sim.sidecar, m->perm) && dt < 60.0;
                    } catch (const std::exception&) {
                    }
                    if (ok) {
                        ++good;
                    } else if (first_failure.empty()) {
                        first_failure = " first failure n=" + std::to_string(n) + " " + to_string(mode) +
                                        " b=" + std::to_string(b) + " seed=" + std::to_string(seed);
                    }
                }
    std::ostringstream d;
    d << good << "/" << total << " recovered with labels, max RMSD " << worst_rmsd << ", slowest " << worst_time << " s"
      << first_failure;
    report(3, "end-to-end reconstruction", good == total, d.str());
}

void edge_mode() {
    std::size_t total = 0, good = 0;
    double worst = 0.0;
    for (std::size_t n = 5; n <= 7; ++n)
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            ++total;
            const auto sim = simulate({n, 2, MeasurementMode::edge, 1, 0, 500 + seed, false});
            try {
                const auto r = reconstruct_edges_complete(sim.data, n);
                const auto m = congruent_match(r.configuration, sim.sidecar.configuration);
                if (m) worst = std::max(worst, m->rmsd);
                if (m && m->rmsd < 1e-7) ++good;
            } catch (const std::exception&) {
            }
        }
    std::ostringstream d;
    d << good << "/" << total << " complete edge sets recovered, max RMSD " << worst;
    report(4, "edge-length mode", good == total, d.str());
}

// Functionals of the base measurements on every ordered choice of 4 of n vertices.
std::vector<std::vector<LengthFunctional>> veridical_bases(MeasurementMode mode, std::size_t n) {
    std::vector<Walk> walks;
    if (mode == MeasurementMode::loop) {
        walks = canonical_walks(CanonicalKind::base, 2);
    } else {
        for (std::size_t e = 0; e < 6; ++e) walks.push_back(Walk::edge(edge_at(e).i, edge_at(e).j));
    }
    std::vector<std::vector<LengthFunctional>> out;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::vector<std::size_t>> maps;
    do {
        std::vector<std::size_t> head(idx.begin(), idx.begin() + 4);
        if (std::find(maps.begin(), maps.end(), head) == maps.end()) maps.push_back(head);
    } while (std::next_permutation(idx.begin(), idx.end()));
    for (const auto& m : maps) {
        std::vector<LengthFunctional> fs;
        for (const auto& w : walks) fs.push_back(walk_to_functional(w, 4).relabeled(m, n));
        out.push_back(fs);
    }
    return out;
}

void no_false_positives() {
    std::size_t tested = 0, accepted = 0, skipped_veridical = 0;
    std::mt19937_64 rng(77);
    for (auto mode : {MeasurementMode::path, MeasurementMode::loop}) {
        const auto bases = veridical_bases(mode, 6);
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            const auto sim = simulate({6, 2, mode, 2, 3, 9000 + seed, false});
            const std::size_t k = sim.data.values.size();
            for (int t = 0; t < 100; ++t) {
                std::vector<std::size_t> pick(k);
                for (std::size_t i = 0; i < k; ++i) pick[i] = i;
                std::shuffle(pick.begin(), pick.end(), rng);
                pick.resize(6);
                std::vector<double> w;
                std::vector<LengthFunctional> fs;
                for (auto p : pick) {
                    w.push_back(sim.data.values[p]);
                    fs.push_back(walk_to_functional(sim.sidecar.ensemble.walks[sim.sidecar.permutation[p]], 6));
                }
                if (std::find(bases.begin(), bases.end(), fs) != bases.end()) {
                    ++skipped_veridical;
                    continue;
                }
                ++tested;
                if (test_base_tuple(w, 2, mode, 2).stage == TestStage::accepted) ++accepted;
            }
        }
    }
    int rank_rejected = 0;
    std::mt19937_64 trng(5);
    std::uniform_real_distribution<double> u(0.01, 100.0);
    for (int t = 0; t < 100; ++t) {
        const double s = u(trng);
        const std::vector<double> w{3 * s, 4 * s, 5 * s, 5 * s, 4 * s, 3 * s};
        const auto r = test_base_tuple(w, 2, MeasurementMode::path, 2);
        const bool member = on_L(VarietyPoint(w, 2), 1e-9).on_variety;
        if (member && r.stage == TestStage::rank) ++rank_rejected;
    }
    std::ostringstream d;
    d << accepted << " acceptances among " << tested << " non-veridical tuples (" << skipped_veridical
      << " veridical draws skipped), 3-4-5 family on the variety and rank-rejected " << rank_rejected << "/100";
    report(5, "no false positives", tested >= 10000 && accepted == 0 && rank_rejected == 100, d.str());
}

void restricted_space() {
    std::size_t total = 0, good = 0;
    double worst = 0.0, worst_time = 0.0;
    ReconstructionOptions opts;
    opts.restricted_3d = true;
    for (std::size_t n : {5u, 6u})
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            ++total;
            const auto sim = simulate({n, 3, MeasurementMode::loop, 2, 0, 300 + seed, true});
            const auto t0 = Clock::now();
            try {
                const auto r = reconstruct(sim.data, opts);
                const double dt = seconds_since(t0);
                worst_time = std::max(worst_time, dt);
                const auto m = congruent_match(r.configuration, sim.sidecar.configuration);
                if (m) worst = std::max(worst, m->rmsd);
                if (r.n == n && m && m->rmsd < 1e-7 && dt < 300.0) ++good;
            } catch (const std::exception&) {
            }
        }
    std::ostringstream d;
    d << good << "/" << total << " recovered, max RMSD " << worst << ", slowest " << worst_time << " s";
    report(6, "restricted three-dimensional mode", good == total, d.str());
}

void variety_properties() {
    bool ok = true;
    double worst_id = 0.0;
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    for (int r = 2; r <= 5; ++r)
        for (int s = 0; s < 200; ++s) {
            Eigen::MatrixXd X(r, r), Y(r, r);
            for (Eigen::Index i = 0; i < X.size(); ++i) {
                X.data()[i] = g(rng);
                Y.data()[i] = g(rng);
            }
            worst_id = std::max(worst_id, signflip_det_identity_check(X, Y).max_discrepancy);
        }
    ok = ok && worst_id < 1e-10;

    int flips_ok = 0;
    for (std::uint64_t s = 0; s < 50; ++s) {
        const auto l = edge_lengths(sample_pseudo_generic(4, 2, 700 + s));
        bool all = true;
        for (unsigned mask = 0; mask < 64; ++mask) {
            auto f = l;
            for (std::size_t e = 0; e < 6; ++e)
                if ((mask >> e) & 1u) f[e] = -f[e];
            all = all && on_L(VarietyPoint(f, 2), 1e-9).on_variety;
        }
        flips_ok += all;
    }
    ok = ok && flips_ok == 50;

    int subspaces_ok = 0;
    const auto& arr = l24_singular_subspaces();
    for (const auto& sp : arr.subspaces) {
        Eigen::Matrix<double, 6, 3> N;
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 6; ++c)
                N(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r)) = static_cast<double>(sp.normals[r][c]);
        bool all = true;
        for (int k = 0; k < 5; ++k) {
            Eigen::Matrix<double, 6, 1> x;
            for (int i = 0; i < 6; ++i) x(i) = g(rng);
            const Eigen::Matrix<double, 6, 1> y = x - N * (N.transpose() * N).ldlt().solve(N.transpose() * x);
            all = all && on_L(VarietyPoint(std::vector<double>(y.data(), y.data() + 6), 2), 1e-9).on_variety;
        }
        subspaces_ok += all;
    }
    ok = ok && arr.subspaces.size() == 60 && subspaces_ok == 60;

    const Eigen::MatrixXd R = regge_matrix().to_double();
    double worst_regge = 0.0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        const auto l = edge_lengths(sample_pseudo_generic(4, 2, 20000 + s));
        const Eigen::VectorXd img = R * Eigen::Map<const Eigen::VectorXd>(l.data(), 6);
        worst_regge = std::max(worst_regge, on_L(VarietyPoint(std::vector<double>(img.data(), img.data() + 6), 2)).residual);
    }
    ok = ok && worst_regge < 1e-9;

    std::ostringstream d;
    d << "sign-flip identity max discrepancy " << worst_id << "; 64 flips preserved on " << flips_ok
      << "/50 points; " << subspaces_ok << "/" << arr.subspaces.size() << " singular subspaces on the variety; Regge image residual "
      << worst_regge;
    report(7, "variety properties", ok, d.str());
}

void negative_fixtures() {
    const Configuration p(1, {{0.0}, {5.0}, {8.0}});
    const Configuration q(1, {{0.0}, {1.0}, {4.0}});
    const MeasurementEnsemble alpha{MeasurementMode::path, 3, {Walk::edge(0, 1), Walk::edge(1, 2), Walk::edge(0, 2)}};
    const MeasurementEnsemble beta{MeasurementMode::path, 3, {Walk({1, 0, 2}), Walk::edge(1, 2), Walk({0, 2, 0})}};
    auto a = evaluate_ordered(alpha, p), b = evaluate_ordered(beta, q);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const bool equal = a == b;
    const bool incongruent = std::abs(p.distance(0, 2) - q.distance(0, 2)) > 1.0;
    std::string refusal = "not refused";
    bool refused = false;
    try {
        reconstruct({a, 1, 2, MeasurementMode::path});
    } catch (const UnsupportedDimension& e) {
        refused = true;
        refusal = e.what();
    } catch (const std::exception& e) {
        refusal = std::string("wrong error: ") + e.what();
    }
    std::ostringstream d;
    d << "multisets {";
    for (std::size_t i = 0; i < a.size(); ++i) d << (i ? ", " : "") << a[i];
    d << "} " << (equal ? "equal" : "differ") << " for incongruent p and q; d = 1 refused: " << refusal;
    report(8, "negative fixtures", equal && incongruent && refused, d.str());
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    const auto full = close_group(standard_generators(true), Quotient::positive_scale);
    group_orders(full);
    canonical_compositions(full);
    end_to_end();
    edge_mode();
    no_false_positives();
    restricted_space();
    variety_properties();
    negative_fixtures();
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria failed") << " in "
              << seconds_since(t0) << " s" << std::endl;
    return failures == 0 ? 0 : 1;
}
