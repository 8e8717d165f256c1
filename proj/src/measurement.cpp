#include "unlabeled/measurement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace unlabeled {

std::string to_string(MeasurementMode mode) {
    switch (mode) {
        case MeasurementMode::path: return "path";
        case MeasurementMode::loop: return "loop";
        case MeasurementMode::edge: return "edge";
    }
    return "path";
}

MeasurementMode parse_mode(const std::string& name) {
    if (name == "path") return MeasurementMode::path;
    if (name == "loop") return MeasurementMode::loop;
    if (name == "edge") return MeasurementMode::edge;
    throw std::invalid_argument("unknown measurement mode '" + name + "' (expected path, loop or edge)");
}

Walk::Walk(std::vector<std::size_t> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw std::invalid_argument("a walk needs at least two vertices");
    std::map<std::size_t, int> counts;
    for (std::size_t k = 1; k < vertices_.size(); ++k) {
        if (vertices_[k] == vertices_[k - 1]) {
            throw std::invalid_argument("walk repeats vertex " + std::to_string(vertices_[k]) +
                                        " immediately");
        }
        ++counts[edge_index(vertices_[k - 1], vertices_[k])];
    }
    edges_.assign(counts.begin(), counts.end());
    kind_ = vertices_.front() == vertices_.back() ? WalkKind::loop : WalkKind::path;
}

std::size_t Walk::max_vertex() const { return *std::max_element(vertices_.begin(), vertices_.end()); }

int Walk::max_multiplicity() const {
    int m = 0;
    for (const auto& [e, c] : edges_) m = std::max(m, c);
    return m;
}

Walk Walk::scaled(int s) const {
    if (s < 1) throw std::invalid_argument("walk scale must be a positive integer");
    // Traverse the sequence forwards and backwards until each edge has s times
    // its multiplicity; for odd s finish on a forward pass.
    std::vector<std::size_t> seq = vertices_;
    if (kind_ == WalkKind::loop) {
        for (int r = 1; r < s; ++r) seq.insert(seq.end(), vertices_.begin() + 1, vertices_.end());
    } else {
        for (int r = 1; r < s; ++r) {
            if (r % 2 == 1) {
                seq.insert(seq.end(), vertices_.rbegin() + 1, vertices_.rend());
            } else {
                seq.insert(seq.end(), vertices_.begin() + 1, vertices_.end());
            }
        }
    }
    return Walk(std::move(seq));
}

LengthFunctional::LengthFunctional(std::size_t n, std::vector<std::int64_t> coefficients)
    : n_(n), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != edge_count(n)) {
        throw std::invalid_argument("functional has " + std::to_string(coeffs_.size()) +
                                    " coefficients, expected " + std::to_string(edge_count(n)));
    }
}

std::int64_t LengthFunctional::bound() const {
    std::int64_t b = 0;
    for (auto c : coeffs_) b = std::max(b, c < 0 ? -c : c);
    return b;
}

bool LengthFunctional::is_whole() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

double LengthFunctional::apply(const std::vector<double>& lengths) const {
    if (lengths.size() != coeffs_.size()) throw SizeMismatch("length vector size mismatch");
    double v = 0.0;
    for (std::size_t e = 0; e < coeffs_.size(); ++e)
        if (coeffs_[e] != 0) v += static_cast<double>(coeffs_[e]) * lengths[e];
    return v;
}

LengthFunctional LengthFunctional::relabeled(const std::vector<std::size_t>& perm, std::size_t new_n) const {
    if (perm.size() != n_) throw SizeMismatch("relabeling must cover every vertex");
    std::vector<std::int64_t> out(edge_count(new_n), 0);
    for (std::size_t e = 0; e < coeffs_.size(); ++e) {
        if (coeffs_[e] == 0) continue;
        const Edge ed = edge_at(e);
        if (perm[ed.i] >= new_n || perm[ed.j] >= new_n) throw IndexOutOfRange("relabeling target out of range");
        out[edge_index(perm[ed.i], perm[ed.j])] += coeffs_[e];
    }
    return LengthFunctional(new_n, std::move(out));
}

LengthFunctional walk_to_functional(const Walk& w, std::size_t n) {
    if (w.max_vertex() >= n) {
        throw IndexOutOfRange("walk vertex " + std::to_string(w.max_vertex()) + " outside K_" +
                              std::to_string(n));
    }
    std::vector<std::int64_t> coeffs(edge_count(n), 0);
    for (const auto& [e, c] : w.edges()) coeffs[e] = c;
    return LengthFunctional(n, std::move(coeffs));
}

std::vector<LengthFunctional> MeasurementEnsemble::functionals() const {
    std::vector<LengthFunctional> out;
    out.reserve(walks.size());
    for (const auto& w : walks) out.push_back(walk_to_functional(w, n));
    return out;
}

std::int64_t MeasurementEnsemble::bound() const {
    std::int64_t b = 0;
    for (const auto& w : walks) b = std::max<std::int64_t>(b, w.max_multiplicity());
    return b;
}

std::vector<double> evaluate_ordered(const MeasurementEnsemble& ensemble, const Configuration& config) {
    const auto l = edge_lengths(config);
    std::vector<double> values;
    values.reserve(ensemble.walks.size());
    for (const auto& w : ensemble.walks) {
        if (w.max_vertex() >= config.size()) {
            throw IndexOutOfRange("walk vertex " + std::to_string(w.max_vertex()) +
                                  " outside configuration of " + std::to_string(config.size()) + " points");
        }
        double v = 0.0;
        for (const auto& [e, c] : w.edges()) v += c * l[e];
        values.push_back(v);
    }
    return values;
}

std::vector<std::size_t> shuffle_permutation(std::size_t k, std::uint64_t seed) {
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

UnlabeledDataSet evaluate(const MeasurementEnsemble& ensemble, const Configuration& config,
                          std::uint64_t seed) {
    const auto ordered = evaluate_ordered(ensemble, config);
    const auto perm = shuffle_permutation(ordered.size(), seed);
    UnlabeledDataSet data;
    data.values.resize(ordered.size());
    for (std::size_t p = 0; p < perm.size(); ++p) data.values[p] = ordered[perm[p]];
    data.dimension = config.dimension();
    data.bound = static_cast<int>(std::max<std::int64_t>(1, ensemble.bound()));
    data.mode = ensemble.mode;
    return data;
}

std::vector<Walk> canonical_walks(CanonicalKind kind, std::size_t d) {
    if (d < 1) throw std::invalid_argument("canonical matrices need d >= 1");
    std::vector<Walk> rows;
    const std::size_t apex = d + 1;
    if (kind == CanonicalKind::base) {
        // Vertex j joins with its ping to 0, then triangles through 0 and each earlier vertex.
        for (std::size_t j = 1; j <= apex; ++j) {
            rows.push_back(Walk::ping(0, j));
            for (std::size_t k = 1; k < j; ++k) rows.push_back(Walk::triangle(0, k, j));
        }
    } else {
        for (std::size_t e = 0; e < edge_count(d + 1); ++e) {
            const Edge ed = edge_at(e);
            rows.push_back(Walk::edge(ed.i, ed.j));
        }
        rows.push_back(Walk::ping(0, apex));
        for (std::size_t k = 1; k <= d; ++k) rows.push_back(Walk::triangle(0, k, apex));
    }
    return rows;
}

IntMatrix canonical_matrix(CanonicalKind kind, std::size_t d) {
    std::vector<LengthFunctional> rows;
    for (const auto& w : canonical_walks(kind, d)) rows.push_back(walk_to_functional(w, d + 2));
    return ensemble_matrix(rows);
}

IntMatrix ensemble_matrix(const std::vector<LengthFunctional>& functionals) {
    if (functionals.empty()) return IntMatrix(0, 0);
    const std::size_t n = functionals.front().vertex_count();
    IntMatrix E(static_cast<Eigen::Index>(functionals.size()), static_cast<Eigen::Index>(edge_count(n)));
    for (std::size_t r = 0; r < functionals.size(); ++r) {
        if (functionals[r].vertex_count() != n) {
            throw SizeMismatch("ensemble matrix rows over different vertex counts");
        }
        for (std::size_t e = 0; e < edge_count(n); ++e)
            E(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(e)) = functionals[r][e];
    }
    return E;
}

namespace {

std::size_t uniform_index(std::mt19937_64& rng, std::size_t size) {
    return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
}

Walk random_walk(std::mt19937_64& rng, std::size_t n, WalkKind kind, int b) {
    const std::size_t max_len = static_cast<std::size_t>(2 * b + 1);
    const std::size_t min_len = kind == WalkKind::loop ? 3 : 2;
    while (true) {
        const std::size_t len = min_len + uniform_index(rng, max_len - min_len + 1);
        std::vector<std::size_t> seq{uniform_index(rng, n)};
        while (seq.size() + 1 < len) {
            std::size_t v = uniform_index(rng, n - 1);
            if (v >= seq.back()) ++v;
            seq.push_back(v);
        }
        if (kind == WalkKind::loop) {
            if (seq.back() == seq.front()) continue;
            seq.push_back(seq.front());
        } else {
            std::size_t v = uniform_index(rng, n - 1);
            if (v >= seq.back()) ++v;
            if (v == seq.front()) continue;
            seq.push_back(v);
        }
        return Walk(std::move(seq));
    }
}

Walk random_anchor_walk(std::mt19937_64& rng, std::size_t n, std::size_t anchor) {
    auto other = [&](std::size_t avoid) {
        std::size_t v;
        do v = uniform_index(rng, n);
        while (v == anchor || v == avoid);
        return v;
    };
    const std::size_t j = other(anchor);
    if (n < 3 || uniform_index(rng, 2) == 0) return Walk::ping(anchor, j);
    return Walk::triangle(anchor, j, other(j));
}

}  // namespace

MeasurementEnsemble build_trilateration_ensemble(std::size_t n, std::size_t d, MeasurementMode mode,
                                                 std::size_t extra, int b, std::uint64_t seed,
                                                 const EnsembleOptions& options) {
    if (d < 1) throw std::invalid_argument("dimension must be >= 1");
    if (n < d + 2) throw std::invalid_argument("an ensemble allowing trilateration needs n >= d+2");
    if (b < 1) throw std::invalid_argument("bounce bound must be >= 1");
    if (mode == MeasurementMode::loop && b < 2) {
        throw std::invalid_argument("loop ensembles need b >= 2 (a ping traverses its edge twice)");
    }
    if (mode == MeasurementMode::edge && extra != 0) {
        throw std::invalid_argument("edge ensembles are the complete edge set; extra walks are not allowed");
    }
    if (options.restricted_through_anchor && mode != MeasurementMode::loop) {
        throw std::invalid_argument("the anchored restriction applies to loop ensembles only");
    }

    MeasurementEnsemble ens;
    ens.mode = mode;
    ens.n = n;

    if (mode == MeasurementMode::edge) {
        for (std::size_t e = 0; e < edge_count(n); ++e) {
            const Edge ed = edge_at(e);
            ens.walks.push_back(Walk::edge(ed.i, ed.j));
        }
        return ens;
    }

    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    auto relabel = [&](const Walk& w) {
        std::vector<std::size_t> seq;
        for (auto v : w.vertices()) seq.push_back(order[v]);
        return Walk(std::move(seq));
    };

    if (mode == MeasurementMode::path) {
        for (std::size_t e = 0; e < edge_count(d + 2); ++e) {
            const Edge ed = edge_at(e);
            ens.walks.push_back(Walk::edge(order[ed.i], order[ed.j]));
        }
    } else {
        for (const auto& w : canonical_walks(CanonicalKind::base, d)) ens.walks.push_back(relabel(w));
    }

    for (std::size_t t = d + 2; t < n; ++t) {
        const std::size_t j = order[t];
        std::vector<std::size_t> previous(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
        std::vector<std::size_t> chosen;
        if (options.restricted_through_anchor) {
            chosen.push_back(order[0]);
            std::vector<std::size_t> rest(previous.begin() + 1, previous.end());
            std::shuffle(rest.begin(), rest.end(), rng);
            chosen.insert(chosen.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(d));
        } else {
            std::shuffle(previous.begin(), previous.end(), rng);
            chosen.assign(previous.begin(), previous.begin() + static_cast<std::ptrdiff_t>(d + 1));
        }
        if (mode == MeasurementMode::path) {
            for (auto i : chosen) ens.walks.push_back(Walk::edge(i, j));
        } else {
            ens.walks.push_back(Walk::ping(chosen[0], j));
            for (std::size_t k = 1; k <= d; ++k) ens.walks.push_back(Walk::triangle(chosen[0], chosen[k], j));
        }
    }

    const WalkKind kind = mode == MeasurementMode::loop ? WalkKind::loop : WalkKind::path;
    std::size_t added = 0;
    for (int attempt = 0; added < extra; ++attempt) {
        if (attempt > 10000) {
            throw std::invalid_argument("could not sample " + std::to_string(extra) +
                                        " distinct extra walks");
        }
        Walk w = options.restricted_through_anchor ? random_anchor_walk(rng, n, order[0])
                                                   : random_walk(rng, n, kind, b);
        if (!w.is_bounded(b)) continue;
        if (std::find(ens.walks.begin(), ens.walks.end(), w) != ens.walks.end()) continue;
        ens.walks.push_back(std::move(w));
        ++added;
    }
    return ens;
}

}  // namespace unlabeled
