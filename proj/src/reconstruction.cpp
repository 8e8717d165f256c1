#include "unlabeled/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "unlabeled/variety.hpp"

namespace unlabeled {

std::string to_string(TestStage stage) {
    switch (stage) {
        case TestStage::accepted: return "accepted";
        case TestStage::screen: return "screen";
        case TestStage::membership: return "membership";
        case TestStage::rank: return "rank";
        case TestStage::realization: return "realization";
    }
    return "unknown";
}

namespace {

const Eigen::MatrixXd& canonical_inverse(CanonicalKind kind, std::size_t d) {
    static Eigen::MatrixXd cache[2][4];
    auto& slot = cache[kind == CanonicalKind::base ? 0 : 1][d];
    if (slot.size() == 0) slot = canonical_matrix(kind, d).cast<double>().fullPivLu().inverse();
    return slot;
}

void check_dimension(std::size_t d) {
    if (d < 2 || d > 3) throw std::invalid_argument("supported dimensions are 2 and 3");
}

std::vector<double> to_lengths(const std::vector<double>& w, std::size_t d, MeasurementMode mode,
                               CanonicalKind kind) {
    if (mode != MeasurementMode::loop) return w;
    const Eigen::VectorXd l = canonical_inverse(kind, d) * Eigen::Map<const Eigen::VectorXd>(w.data(),
                                                                                             static_cast<Eigen::Index>(w.size()));
    return {l.data(), l.data() + l.size()};
}

std::vector<double> squares(const std::vector<double>& l) {
    std::vector<double> out(l);
    for (double& x : out) x *= x;
    return out;
}

}  // namespace

BaseTest test_base_tuple(const std::vector<double>& w, std::size_t d, MeasurementMode mode, int b,
                         const ReconstructionOptions& opts) {
    check_dimension(d);
    if (w.size() != edge_count(d + 2)) throw SizeMismatch("base tuple must have D values");
    BaseTest out;
    const auto l = to_lengths(w, d, mode, CanonicalKind::base);
    if (std::any_of(l.begin(), l.end(), [](double x) { return !(x > 0.0); })) {
        out.stage = TestStage::screen;
        return out;
    }
    const VarietyPoint point(l, d);
    const auto member = on_L(point, opts.membership_tol);
    out.residual = member.residual;
    if (!member.on_variety) {
        out.stage = TestStage::membership;
        return out;
    }
    if (d == 2) {
        const bool singular = is_singular_L24(point, opts.singular_tol);
        Rank2dOptions ro;
        ro.tol = opts.relation_tol;
        out.rank = rational_rank_2d(l, b, singular, ro);
    } else {
        out.rank = rank_bypass_restricted_3d(w, opts.restricted_3d, opts.relation_tol);
    }
    if (!out.rank.certified_full) {
        out.stage = TestStage::rank;
        return out;
    }
    try {
        out.simplex = realize_simplex(squares(l), d);
    } catch (const GeometryError&) {
        out.stage = TestStage::realization;
        return out;
    }
    out.stage = TestStage::accepted;
    return out;
}

GrowthTest test_growth_tuple(const Configuration& base, const std::vector<double>& w, MeasurementMode mode,
                             double scale, const ReconstructionOptions& opts) {
    const std::size_t d = base.dimension();
    check_dimension(d);
    if (base.size() != d + 1 || w.size() != d + 1) throw SizeMismatch("growth needs d+1 base points and d+1 values");
    if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
    GrowthTest out;

    std::vector<double> full;
    for (std::size_t e = 0; e < edge_count(d + 1); ++e) {
        const Edge ed = edge_at(e);
        full.push_back(base.distance(ed.i, ed.j));
    }
    for (double v : w) full.push_back(v / scale);
    const auto l = to_lengths(full, d, mode, CanonicalKind::trilat);
    if (std::any_of(l.begin(), l.end(), [](double x) { return !(x > 0.0); })) return out;

    const VarietyPoint point(l, d);
    const auto member = on_L(point, opts.membership_tol);
    out.residual = member.residual;
    if (!member.on_variety) {
        out.stage = TestStage::membership;
        return out;
    }
    // The first C lengths re-measure a certified base, so only the singular
    // locus remains to be excluded.
    if (d == 2 && is_singular_L24(point, opts.singular_tol)) {
        out.stage = TestStage::rank;
        return out;
    }
    std::vector<double> sq;
    for (std::size_t i = 0; i <= d; ++i) sq.push_back(l[edge_index(i, d + 1)] * l[edge_index(i, d + 1)]);
    try {
        out.point = trilaterate_point(base, sq, std::max(1e-8, 100 * opts.membership_tol));
    } catch (const GeometryError&) {
        out.stage = TestStage::realization;
        return out;
    }
    out.stage = TestStage::accepted;
    return out;
}

namespace {

struct Candidate {
    std::vector<Eigen::VectorXd> points;
    std::vector<char> claimed;  // by sorted position
    std::vector<std::pair<std::size_t, Walk>> walks;  // (sorted position, walk in candidate labels)

    Configuration configuration() const {
        Eigen::MatrixXd m(points.front().size(), static_cast<Eigen::Index>(points.size()));
        for (std::size_t i = 0; i < points.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = points[i];
        return Configuration(std::move(m));
    }
};

struct GrowthOption {
    Eigen::VectorXd point;
    std::vector<std::size_t> vertices;  // anchor first
    std::vector<std::size_t> tokens;    // sorted positions, aligned with vertices
    double residual;
};

// Up to two points at distances rho from d centers in R^d.
std::vector<Eigen::VectorXd> sphere_intersections(const std::vector<Eigen::VectorXd>& centers,
                                                  const std::vector<double>& rho, double eps) {
    const auto d = centers.front().size();
    Eigen::MatrixXd A(d - 1, d);
    Eigen::VectorXd c(d - 1);
    for (Eigen::Index i = 1; i < d; ++i) {
        const Eigen::VectorXd diff = centers[static_cast<std::size_t>(i)] - centers[0];
        A.row(i - 1) = diff.transpose();
        c(i - 1) = 0.5 * (diff.squaredNorm() - rho[static_cast<std::size_t>(i)] * rho[static_cast<std::size_t>(i)] +
                          rho[0] * rho[0]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-9 * sv(0)) return {};
    const Eigen::VectorXd y0 = svd.solve(c);
    const Eigen::VectorXd normal = svd.matrixV().col(d - 1);
    const double t2 = rho[0] * rho[0] - y0.squaredNorm();
    if (t2 < -eps) return {};
    const double t = std::sqrt(std::max(0.0, t2));
    return {centers[0] + y0 + t * normal, centers[0] + y0 - t * normal};
}

class Engine {
public:
    Engine(const UnlabeledDataSet& data, MeasurementMode mode, int b, const ReconstructionOptions& opts)
        : d_(data.dimension), mode_(mode), b_(b), opts_(opts), loop_(mode == MeasurementMode::loop) {
        order_.resize(data.values.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t x, std::size_t y) { return data.values[x] < data.values[y]; });
        for (auto i : order_) values_.push_back(data.values[i]);
        vmax_ = values_.empty() ? 0.0 : values_.back();
        window_ = opts.lookup_tol * vmax_;
        eps_ = 1e-12 * vmax_ * vmax_;
        // Slot layout of the base: spokes 1..d+1 (edges or pings to vertex 0), then rims.
        for (std::size_t k = 2; k <= d_; ++k)
            for (std::size_t j = 1; j < k; ++j) rims_.push_back({j, k});
        for (std::size_t j = 1; j + 1 <= d_; ++j) rims_.push_back({j, d_ + 1});
    }

    ReconstructionResult run() {
        used_.assign(values_.size(), 0);
        spoke_pos_.assign(d_ + 2, 0);
        r_.assign(d_ + 2, 0.0);
        rim_pos_.assign(d_ + 2, std::vector<std::size_t>(d_ + 2, 0));
        len_.assign(d_ + 2, std::vector<double>(d_ + 2, 0.0));
        P_.assign(d_ + 1, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(d_)));
        choose_spoke(1, 0);
        if (candidates_.empty()) throw NoBaseFound("no tuple of the data describes a base simplex");
        return select();
    }

    ReconstructionDiagnostics diag;

private:
    std::size_t d_;
    MeasurementMode mode_;
    int b_;
    ReconstructionOptions opts_;
    bool loop_;
    std::vector<std::size_t> order_;  // sorted position -> data index
    std::vector<double> values_;      // sorted
    double vmax_ = 0.0;
    double window_ = 0.0;
    double eps_ = 0.0;
    std::vector<Edge> rims_;

    std::vector<char> used_;
    std::vector<std::size_t> spoke_pos_;
    std::vector<double> r_;
    std::vector<std::vector<std::size_t>> rim_pos_;
    std::vector<std::vector<double>> len_;
    std::vector<Eigen::VectorXd> P_;
    std::vector<Candidate> candidates_;

    std::pair<std::size_t, std::size_t> value_range(double lo, double hi) const {
        auto first = std::upper_bound(values_.begin(), values_.end(), lo);
        auto last = std::lower_bound(values_.begin(), values_.end(), hi);
        return {static_cast<std::size_t>(first - values_.begin()),
                static_cast<std::size_t>(std::max(first, last) - values_.begin())};
    }

    std::pair<std::size_t, std::size_t> near(double v) const { return value_range(v - window_, v + window_); }

    // Solve canonical coordinates from distances to P_[0..m-1]; returns the squared
    // height left for coordinate m-1.
    double solve_canonical(std::size_t m, const std::vector<double>& dist, Eigen::VectorXd& x) const {
        x.setZero();
        const double r0 = dist[0];
        for (std::size_t i = 1; i < m; ++i) {
            const Eigen::VectorXd& p = P_[i];
            double rhs = 0.5 * (r0 * r0 - dist[i] * dist[i] + p.squaredNorm());
            for (std::size_t c = 0; c + 1 < i; ++c) rhs -= p(static_cast<Eigen::Index>(c)) * x(static_cast<Eigen::Index>(c));
            x(static_cast<Eigen::Index>(i - 1)) = rhs / p(static_cast<Eigen::Index>(i - 1));
        }
        return r0 * r0 - x.squaredNorm();
    }

    double spoke_length(double v) const { return loop_ ? 0.5 * v : v; }
    double rim_length(double v, std::size_t j, std::size_t k) const { return loop_ ? v - r_[j] - r_[k] : v; }
    double rim_value(double l, std::size_t j, std::size_t k) const { return loop_ ? l + r_[j] + r_[k] : l; }

    void choose_spoke(std::size_t j, std::size_t start) {
        if (j > d_ + 1) {
            P_[0].setZero();
            P_[1].setZero();
            P_[1](0) = r_[1];
            choose_rim(0);
            return;
        }
        for (std::size_t s = start; s < values_.size(); ++s) {
            if (!(values_[s] > 0.0)) continue;
            spoke_pos_[j] = s;
            r_[j] = spoke_length(values_[s]);
            used_[s] = 1;
            choose_spoke(j + 1, s + 1);
            used_[s] = 0;
        }
    }

    void choose_rim(std::size_t idx) {
        if (idx == rims_.size()) {
            predict_last();
            return;
        }
        const auto [j, k] = rims_[idx];
        const double lo = rim_value(std::abs(r_[j] - r_[k]), j, k);
        const double hi = rim_value(r_[j] + r_[k], j, k);
        const auto [first, last] = value_range(lo, hi);
        for (std::size_t s = first; s < last; ++s) {
            if (used_[s]) continue;
            rim_pos_[j][k] = s;
            len_[j][k] = len_[k][j] = rim_length(values_[s], j, k);
            if (k <= d_ && j + 1 == k) {
                std::vector<double> dist{r_[k]};
                for (std::size_t i = 1; i < k; ++i) dist.push_back(len_[i][k]);
                Eigen::VectorXd x(static_cast<Eigen::Index>(d_));
                const double h2 = solve_canonical(k, dist, x);
                if (!(h2 > eps_)) continue;
                x(static_cast<Eigen::Index>(k - 1)) = std::sqrt(h2);
                P_[k] = x;
            }
            used_[s] = 1;
            choose_rim(idx + 1);
            used_[s] = 0;
        }
    }

    void predict_last() {
        const std::size_t last = d_ + 1;
        std::vector<double> dist{r_[last]};
        for (std::size_t i = 1; i < d_; ++i) dist.push_back(len_[i][last]);
        Eigen::VectorXd x(static_cast<Eigen::Index>(d_));
        const double h2 = solve_canonical(d_, dist, x);
        if (h2 < -eps_) return;
        const double h = std::sqrt(std::max(0.0, h2));
        for (int sign : {1, -1}) {
            if (sign < 0 && h == 0.0) break;
            x(static_cast<Eigen::Index>(d_ - 1)) = sign * h;
            const double l = (x - P_[d_]).norm();
            const auto [first, end] = near(rim_value(l, d_, last));
            for (std::size_t s = first; s < end; ++s) {
                if (used_[s]) continue;
                rim_pos_[d_][last] = s;
                ++diag.base_tuples_screened;
                try_base();
            }
        }
    }

    std::size_t slot_position(const Walk& w) const {
        std::size_t i, j;
        if (loop_) {
            const auto& v = w.vertices();
            if (v.size() == 3) return spoke_pos_[v[1]];
            i = v[1];
            j = v[2];
        } else {
            i = w.vertices()[0];
            j = w.vertices()[1];
            if (i == 0) return spoke_pos_[j];
        }
        return rim_pos_[std::min(i, j)][std::max(i, j)];
    }

    std::vector<Walk> base_walks() const {
        if (loop_) return canonical_walks(CanonicalKind::base, d_);
        std::vector<Walk> out;
        for (std::size_t e = 0; e < edge_count(d_ + 2); ++e) {
            const Edge ed = edge_at(e);
            out.push_back(Walk::edge(ed.i, ed.j));
        }
        return out;
    }

    void try_base() {
        const auto walks = base_walks();
        std::vector<double> w;
        std::vector<std::size_t> positions;
        for (const auto& walk : walks) {
            positions.push_back(slot_position(walk));
            w.push_back(values_[positions.back()]);
        }
        ++diag.base_tests;
        const auto test = test_base_tuple(w, d_, mode_, b_, opts_);
        switch (test.stage) {
            case TestStage::membership: ++diag.rejected_membership; return;
            case TestStage::rank: ++diag.rejected_rank; return;
            case TestStage::realization: ++diag.rejected_realization; return;
            case TestStage::screen: return;
            case TestStage::accepted: break;
        }
        ++diag.bases_accepted;
        const Configuration& simplex = *test.simplex;
        for (const auto& c : candidates_) {
            const auto matches = find_similar_subconfigurations(c.configuration(), simplex, 1e-7);
            if (std::any_of(matches.begin(), matches.end(),
                            [](const SimilarMatch& m) { return std::abs(m.scale - 1.0) < 1e-6; })) {
                ++diag.bases_skipped_duplicate;
                return;
            }
        }
        Candidate cand;
        cand.claimed.assign(values_.size(), 0);
        for (std::size_t i = 0; i < simplex.size(); ++i) cand.points.push_back(simplex.point(i));
        for (std::size_t r = 0; r < walks.size(); ++r) {
            cand.claimed[positions[r]] = 1;
            cand.walks.emplace_back(positions[r], walks[r]);
        }
        grow(cand);
        candidates_.push_back(std::move(cand));
    }

    double dist(const Candidate& c, std::size_t i, std::size_t j) const { return (c.points[i] - c.points[j]).norm(); }

    void grow(Candidate& c) {
        while (true) {
            std::optional<GrowthOption> best;
            collect_growth(c, best);
            if (!best) return;
            const std::size_t x = c.points.size();
            c.points.push_back(best->point);
            const std::size_t a = best->vertices[0];
            for (std::size_t i = 0; i < best->vertices.size(); ++i) {
                const std::size_t v = best->vertices[i];
                c.claimed[best->tokens[i]] = 1;
                Walk walk = !loop_ ? Walk::edge(v, x) : (i == 0 ? Walk::ping(a, x) : Walk::triangle(a, v, x));
                c.walks.emplace_back(best->tokens[i], std::move(walk));
            }
        }
    }

    void collect_growth(const Candidate& c, std::optional<GrowthOption>& best) {
        const std::size_t m = c.points.size();
        const double min_sep = 1e-6 * vmax_;
        std::vector<std::size_t> anchors;
        if (opts_.restricted_3d && d_ == 3) anchors.push_back(0);
        else
            for (std::size_t a = 0; a < m; ++a) anchors.push_back(a);

        std::vector<std::size_t> verts(d_ + 1), toks(d_ + 1);
        std::vector<double> radius(d_ + 1);

        std::function<void(std::size_t)> choose = [&](std::size_t slot) {
            if (slot == d_) {
                std::vector<Eigen::VectorXd> centers;
                for (std::size_t i = 0; i < d_; ++i) centers.push_back(c.points[verts[i]]);
                const auto pts = sphere_intersections(centers, std::vector<double>(radius.begin(), radius.begin() + static_cast<std::ptrdiff_t>(d_)), 1e3 * eps_);
                for (const auto& x : pts) {
                    for (std::size_t u = 0; u < m; ++u) {
                        if (std::find(verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(d_), u) !=
                            verts.begin() + static_cast<std::ptrdiff_t>(d_))
                            continue;
                        const double rho = (x - c.points[u]).norm();
                        const double v = loop_ ? dist(c, verts[0], u) + radius[0] + rho : rho;
                        const auto [first, end] = near(v);
                        for (std::size_t s = first; s < end; ++s) {
                            if (c.claimed[s] ||
                                std::find(toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(d_), s) !=
                                    toks.begin() + static_cast<std::ptrdiff_t>(d_))
                                continue;
                            verts[d_] = u;
                            toks[d_] = s;
                            test_option(c, verts, toks, best, min_sep);
                        }
                    }
                }
                return;
            }
            const std::size_t a = verts[0];
            for (std::size_t k = 0; k < m; ++k) {
                if (k == a) continue;
                if (slot > 1 && k <= verts[slot - 1]) continue;
                if (!loop_ && k <= a) continue;
                const double dak = dist(c, a, k);
                // Tokens giving a radius r_k with |r_a - d_ak| < r_k < r_a + d_ak.
                const double lo = std::abs(radius[0] - dak), hi = radius[0] + dak;
                const double vlo = loop_ ? dak + radius[0] + lo : lo;
                const double vhi = loop_ ? dak + radius[0] + hi : hi;
                const auto [first, end] = value_range(vlo, vhi);
                for (std::size_t s = first; s < end; ++s) {
                    if (c.claimed[s] || std::find(toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(slot), s) !=
                                            toks.begin() + static_cast<std::ptrdiff_t>(slot))
                        continue;
                    verts[slot] = k;
                    toks[slot] = s;
                    radius[slot] = loop_ ? values_[s] - dak - radius[0] : values_[s];
                    choose(slot + 1);
                }
            }
        };

        for (std::size_t a : anchors) {
            for (std::size_t s = 0; s < values_.size(); ++s) {
                if (c.claimed[s] || !(values_[s] > 0.0)) continue;
                verts[0] = a;
                toks[0] = s;
                radius[0] = loop_ ? 0.5 * values_[s] : values_[s];
                choose(1);
            }
        }
    }

    void test_option(const Candidate& c, const std::vector<std::size_t>& verts, const std::vector<std::size_t>& toks,
                     std::optional<GrowthOption>& best, double min_sep) {
        Eigen::MatrixXd base(static_cast<Eigen::Index>(d_), static_cast<Eigen::Index>(d_ + 1));
        std::vector<double> w;
        for (std::size_t i = 0; i <= d_; ++i) {
            base.col(static_cast<Eigen::Index>(i)) = c.points[verts[i]];
            w.push_back(values_[toks[i]]);
        }
        ++diag.growth_tests;
        const auto test = test_growth_tuple(Configuration(base), w, mode_, 1.0, opts_);
        switch (test.stage) {
            case TestStage::membership: ++diag.rejected_membership; return;
            case TestStage::rank: ++diag.rejected_rank; return;
            case TestStage::realization: ++diag.rejected_realization; return;
            case TestStage::screen: return;
            case TestStage::accepted: break;
        }
        for (const auto& p : c.points)
            if ((p - *test.point).norm() <= min_sep) return;
        ++diag.growth_accepted;
        if (!best || test.residual < best->residual) best = GrowthOption{*test.point, verts, toks, test.residual};
    }

    static double rms_size(const Candidate& c) {
        Eigen::VectorXd centroid = Eigen::VectorXd::Zero(c.points.front().size());
        for (const auto& p : c.points) centroid += p;
        centroid /= static_cast<double>(c.points.size());
        double s = 0.0;
        for (const auto& p : c.points) s += (p - centroid).squaredNorm();
        return std::sqrt(s / static_cast<double>(c.points.size()));
    }

    ReconstructionResult select() {
        diag.candidates = candidates_.size();
        std::size_t max_size = 0;
        for (const auto& c : candidates_) max_size = std::max(max_size, c.points.size());
        std::vector<std::size_t> maximal;
        for (std::size_t i = 0; i < candidates_.size(); ++i)
            if (candidates_[i].points.size() == max_size) maximal.push_back(i);
        diag.maximal_candidates = maximal.size();

        std::size_t chosen = maximal.front();
        double smallest = rms_size(candidates_[chosen]);
        for (auto i : maximal) {
            const double s = rms_size(candidates_[i]);
            if (s < smallest * (1 - 1e-6)) {
                smallest = s;
                chosen = i;
            }
        }
        const Configuration picked = candidates_[chosen].configuration();
        for (auto i : maximal) {
            if (i == chosen) continue;
            if (std::abs(rms_size(candidates_[i]) / smallest - 1.0) > 1e-6) continue;
            if (!match_congruent(picked, candidates_[i].configuration(), 1e-6)) {
                throw AmbiguousResult("two non-congruent maximal candidates share the smallest scale");
            }
        }

        const Candidate& c = candidates_[chosen];
        ReconstructionResult out;
        out.n = c.points.size();
        out.configuration = canonical_pose(picked);
        out.mode = mode_;
        out.scale = rms_size(c) / smallest;
        for (const auto& [pos, walk] : c.walks) out.assignments.push_back({order_[pos], walk, walk_to_functional(walk, out.n)});
        std::sort(out.assignments.begin(), out.assignments.end(),
                  [](const Assignment& x, const Assignment& y) { return x.value_index < y.value_index; });
        diag.claimed_values = c.walks.size();
        diag.total_values = values_.size();
        out.diagnostics = diag;
        return out;
    }
};

void validate(const UnlabeledDataSet& data, const ReconstructionOptions& opts) {
    if (data.dimension == 1) {
        throw UnsupportedDimension(
            "d = 1 is refused: on the line, unlabeled trilateration is not unique (three points measured by "
            "edges [1,2],[2,3],[1,3] give the same values as another configuration measured by paths [2,1,3], "
            "[2,3], [1,3,1]; the variety L_{1,3} is reducible)");
    }
    if (data.dimension == 3 && !opts.restricted_3d) {
        throw UnsupportedDimension(
            "d = 3 is supported only for loop ensembles of pings and triangles through one common vertex; "
            "pass the restricted-3d assumption to assert this");
    }
    if (data.dimension == 3 && data.mode != MeasurementMode::loop) {
        throw UnsupportedDimension("d = 3 reconstruction requires loop mode");
    }
    if (data.dimension < 1 || data.dimension > 3) {
        throw UnsupportedDimension("dimension " + std::to_string(data.dimension) + " is not supported");
    }
    if (data.bound < 1) throw std::invalid_argument("bounce bound must be >= 1");
    for (double v : data.values)
        if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("measurement values must be finite and >= 0");
    if (data.values.size() < edge_count(data.dimension + 2)) {
        throw NoBaseFound("fewer values than a single base simplex needs");
    }
}

}  // namespace

ReconstructionResult reconstruct(const UnlabeledDataSet& data, const ReconstructionOptions& opts) {
    validate(data, opts);
    if (data.mode == MeasurementMode::edge) {
        UnlabeledDataSet edges = data;
        if (opts.squared)
            for (double& v : edges.values) v = std::sqrt(v);
        Engine engine(edges, MeasurementMode::path, 1, opts);
        auto result = engine.run();
        result.mode = MeasurementMode::edge;
        return result;
    }
    Engine engine(data, data.mode, data.bound, opts);
    return engine.run();
}

ReconstructionResult reconstruct_edges_complete(const UnlabeledDataSet& data, std::size_t n,
                                                const ReconstructionOptions& opts) {
    if (data.values.size() != edge_count(n)) {
        throw SizeMismatch("complete edge data on " + std::to_string(n) + " points needs " +
                           std::to_string(edge_count(n)) + " values");
    }
    UnlabeledDataSet edges = data;
    edges.mode = MeasurementMode::edge;
    edges.bound = 1;
    return reconstruct(edges, opts);
}

}  // namespace unlabeled
