#include "unlabeled/cli_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace unlabeled {

void validate(const ExperimentSpec& spec) {
    if (spec.d < 1 || spec.d > 3) throw std::invalid_argument("dimension must be 1, 2 or 3");
    if (spec.n < spec.d + 2) throw std::invalid_argument("need at least d+2 points");
    if (spec.b < 1) throw std::invalid_argument("bound must be >= 1");
    if (spec.mode == MeasurementMode::loop && spec.b < 2) {
        throw std::invalid_argument("loop mode needs bound >= 2: a ping traverses its edge twice");
    }
    if (spec.mode == MeasurementMode::edge && spec.extra != 0) {
        throw std::invalid_argument("edge mode measures exactly the complete edge set; extra must be 0");
    }
    if (spec.restricted_3d && spec.mode != MeasurementMode::loop) {
        throw std::invalid_argument("the restricted ensemble is a loop ensemble");
    }
}

Simulation simulate(const ExperimentSpec& spec) {
    validate(spec);
    Simulation sim;
    sim.sidecar.configuration = sample_pseudo_generic(spec.n, spec.d, spec.seed);
    EnsembleOptions eo;
    eo.restricted_through_anchor = spec.restricted_3d;
    sim.sidecar.ensemble = build_trilateration_ensemble(spec.n, spec.d, spec.mode, spec.extra, spec.b, spec.seed, eo);
    sim.data = evaluate(sim.sidecar.ensemble, sim.sidecar.configuration, spec.seed);
    sim.data.bound = spec.mode == MeasurementMode::edge ? 1 : spec.b;
    sim.sidecar.permutation = shuffle_permutation(sim.data.values.size(), spec.seed);
    return sim;
}

namespace {

template <typename T>
T field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
}

}  // namespace

json dataset_to_json(const UnlabeledDataSet& data, const json& meta) {
    json j;
    j["dimension"] = data.dimension;
    j["bound"] = data.bound;
    j["mode"] = to_string(data.mode);
    j["values"] = data.values;
    if (!meta.is_null()) j["meta"] = meta;
    return j;
}

UnlabeledDataSet dataset_from_json(const json& j) {
    UnlabeledDataSet data;
    const auto dim = field<long long>(j, "dimension");
    if (dim < 1) throw FormatError("dimension must be positive");
    data.dimension = static_cast<std::size_t>(dim);
    data.bound = field<int>(j, "bound");
    if (data.bound < 1) throw FormatError("bound must be >= 1");
    try {
        data.mode = parse_mode(field<std::string>(j, "mode"));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    data.values = field<std::vector<double>>(j, "values");
    for (double v : data.values)
        if (!std::isfinite(v) || v < 0.0) throw FormatError("values must be finite and non-negative");
    return data;
}

json configuration_to_json(const Configuration& config) {
    return json{{"dimension", config.dimension()}, {"points", config.to_rows()}};
}

Configuration configuration_from_json(const json& j) {
    const auto dim = field<std::size_t>(j, "dimension");
    const auto rows = field<std::vector<std::vector<double>>>(j, "points");
    try {
        return Configuration(dim, rows);
    } catch (const std::exception& e) {
        throw FormatError(std::string("points: ") + e.what());
    }
}

json walk_to_json(const Walk& w) { return w.vertices(); }

Walk walk_from_json(const json& j) {
    try {
        return Walk(j.get<std::vector<std::size_t>>());
    } catch (const json::exception& e) {
        throw FormatError(std::string("walk: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("walk: ") + e.what());
    }
}

json sidecar_to_json(const Sidecar& s) {
    json walks = json::array();
    for (const auto& w : s.ensemble.walks) walks.push_back(walk_to_json(w));
    return json{{"configuration", configuration_to_json(s.configuration)},
                {"ensemble", {{"mode", to_string(s.ensemble.mode)}, {"n", s.ensemble.n}, {"walks", walks}}},
                {"permutation", s.permutation}};
}

Sidecar sidecar_from_json(const json& j) {
    Sidecar s;
    s.configuration = configuration_from_json(field<json>(j, "configuration"));
    const auto ens = field<json>(j, "ensemble");
    s.ensemble.mode = parse_mode(field<std::string>(ens, "mode"));
    s.ensemble.n = field<std::size_t>(ens, "n");
    for (const auto& w : field<json>(ens, "walks")) s.ensemble.walks.push_back(walk_from_json(w));
    s.permutation = field<std::vector<std::size_t>>(j, "permutation");
    if (s.permutation.size() != s.ensemble.walks.size()) throw FormatError("permutation and walks differ in length");
    return s;
}

json result_to_json(const ReconstructionResult& r) {
    const auto& d = r.diagnostics;
    json assignments = json::array();
    for (const auto& a : r.assignments) {
        assignments.push_back({{"value_index", a.value_index},
                               {"walk", walk_to_json(a.walk)},
                               {"coefficients", a.functional.coefficients()}});
    }
    return json{{"n", r.n},
                {"dimension", r.configuration.dimension()},
                {"mode", to_string(r.mode)},
                {"points", r.configuration.to_rows()},
                {"scale", r.scale},
                {"assignments", assignments},
                {"diagnostics",
                 {{"base_tuples_screened", d.base_tuples_screened},
                  {"base_tests", d.base_tests},
                  {"bases_accepted", d.bases_accepted},
                  {"bases_skipped_duplicate", d.bases_skipped_duplicate},
                  {"growth_tests", d.growth_tests},
                  {"growth_accepted", d.growth_accepted},
                  {"rejected_membership", d.rejected_membership},
                  {"rejected_rank", d.rejected_rank},
                  {"rejected_realization", d.rejected_realization},
                  {"candidates", d.candidates},
                  {"maximal_candidates", d.maximal_candidates},
                  {"claimed_values", d.claimed_values},
                  {"total_values", d.total_values}}}};
}

ResultFile result_from_json(const json& j) {
    ResultFile r;
    r.n = field<std::size_t>(j, "n");
    r.configuration = configuration_from_json(j);
    r.scale = field<double>(j, "scale");
    if (r.configuration.size() != r.n) throw FormatError("n does not match the number of points");
    return r;
}

json rational_matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& q = m(r, c);
            row.push_back({boost::multiprecision::numerator(q).str(), boost::multiprecision::denominator(q).str()});
        }
        rows.push_back(row);
    }
    return rows;
}

RationalMatrix rational_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw FormatError("rational matrix must be an array of rows");
    RationalMatrix m(j.size(), j[0].size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != m.cols()) throw FormatError("ragged rational matrix");
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& e = j[r][c];
            if (!e.is_array() || e.size() != 2) throw FormatError("entries are [numerator, denominator] pairs");
            try {
                const std::string num = e[0].is_string() ? e[0].get<std::string>() : e[0].dump();
                const std::string den = e[1].is_string() ? e[1].get<std::string>() : e[1].dump();
                m(r, c) = Rational(num + "/" + den);
            } catch (const std::exception& ex) {
                throw FormatError(std::string("bad rational entry: ") + ex.what());
            }
        }
    }
    return m;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write " + path);
    out << j.dump(2) << "\n";
    if (!out) throw FormatError("write failed: " + path);
}

std::string render_svg(const Configuration& reconstruction, const std::optional<Configuration>& truth) {
    const std::size_t n = reconstruction.size();
    std::vector<Eigen::VectorXd> shown;
    for (std::size_t i = 0; i < n; ++i) shown.push_back(reconstruction.point(i));

    std::vector<Eigen::VectorXd> ground;
    if (truth) {
        if (truth->size() != n) {
            throw SizeMismatch("reconstruction has " + std::to_string(n) + " points, ground truth " +
                               std::to_string(truth->size()));
        }
        if (truth->dimension() != reconstruction.dimension()) throw SizeMismatch("dimension mismatch");
        auto perm = match_congruent(reconstruction, *truth, 1e-6);
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = perm ? (*perm)[i] : i;
        const Configuration matched = truth->subset(idx);
        const auto al = align_congruent(matched, reconstruction);
        for (std::size_t i = 0; i < n; ++i) ground.push_back(al.orthogonal * matched.point(i) + al.translation);
    }

    auto coord = [](const Eigen::VectorXd& p, int k) { return k < p.size() ? p(k) : 0.0; };
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto* set : {&shown, &ground})
        for (const auto& p : *set) {
            xmin = std::min(xmin, coord(p, 0));
            xmax = std::max(xmax, coord(p, 0));
            ymin = std::min(ymin, coord(p, 1));
            ymax = std::max(ymax, coord(p, 1));
        }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double size = 400.0, margin = 30.0;
    auto sx = [&](double x) { return margin + (x - xmin) / span * size; };
    auto sy = [&](double y) { return margin + size - (y - ymin) / span * size; };

    std::ostringstream os;
    os << std::setprecision(6);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * margin << "\" height=\""
       << size + 2 * margin << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::size_t i = 0; i < ground.size(); ++i) {
        os << "<circle class=\"truth\" cx=\"" << sx(coord(ground[i], 0)) << "\" cy=\"" << sy(coord(ground[i], 1))
           << "\" r=\"9\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        os << "<circle class=\"reconstructed\" cx=\"" << sx(coord(shown[i], 0)) << "\" cy=\""
           << sy(coord(shown[i], 1)) << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
        os << "<text x=\"" << sx(coord(shown[i], 0)) + 6 << "\" y=\"" << sy(coord(shown[i], 1)) - 6
           << "\" font-size=\"11\">" << i << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace unlabeled
