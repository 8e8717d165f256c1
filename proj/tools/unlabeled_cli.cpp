#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "unlabeled/cli_io.hpp"
#include "unlabeled/rank.hpp"
#include "unlabeled/variety.hpp"

using namespace unlabeled;

namespace {

enum Exit { ok = 0, io_error = 1, no_base = 2, ambiguous = 3, unsupported = 4 };

int cmd_simulate(const ExperimentSpec& spec, const std::string& out, const std::string& sidecar_path) {
    const auto sim = simulate(spec);
    json meta{{"seed", spec.seed}, {"generator", kGeneratorVersion}};
    write_json_file(out, dataset_to_json(sim.data, meta));
    write_json_file(sidecar_path.empty() ? out + ".truth.json" : sidecar_path, sidecar_to_json(sim.sidecar));
    std::cout << "wrote " << sim.data.values.size() << " values to " << out << "\n";
    return ok;
}

int cmd_reconstruct(const std::string& in, const std::string& out, const ReconstructionOptions& opts) {
    const auto data = dataset_from_json(read_json_file(in));
    ReconstructionResult r;
    try {
        r = reconstruct(data, opts);
    } catch (const NoBaseFound& e) {
        std::cerr << "no base found: " << e.what() << "\n";
        return no_base;
    } catch (const AmbiguousResult& e) {
        std::cerr << "ambiguous: " << e.what() << "\n";
        return ambiguous;
    } catch (const UnsupportedDimension& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return unsupported;
    }
    const auto j = result_to_json(r);
    if (out.empty()) std::cout << j.dump(2) << "\n";
    else write_json_file(out, j);
    std::cerr << "reconstructed " << r.n << " points, claimed " << r.diagnostics.claimed_values << "/"
              << r.diagnostics.total_values << " values\n";
    return ok;
}

int cmd_verify_group(const std::string& out, bool sign_quotient) {
    auto order = [](bool regge, Quotient q) { return close_group(standard_generators(regge), q); };
    const auto pos = order(false, Quotient::positive_scale);
    const auto signs = order(false, Quotient::sign_and_scale);
    const auto full = order(true, Quotient::positive_scale);
    const auto full_signs = order(true, Quotient::sign_and_scale);
    const auto nonneg = filter_nonnegative(full);
    const auto n1 = RationalMatrix::from_integers(canonical_matrix(CanonicalKind::base, 2));
    const auto n2 = RationalMatrix::from_integers(canonical_matrix(CanonicalKind::trilat, 2));
    const auto c1 = check_canonical_nonneg_compositions(full, n1);
    const auto c2 = check_canonical_nonneg_compositions(full, n2);

    std::cout << "relabelings+flips, sign-and-scale quotient: " << signs.size() << "\n";
    std::cout << "relabelings+flips, positive-scale quotient: " << pos.size() << "\n";
    std::cout << "with Regge, sign-and-scale quotient: " << full_signs.size() << "\n";
    std::cout << "with Regge, positive-scale quotient: " << full.size() << "\n";
    std::cout << "non-negative elements: " << nonneg.size() << "\n";
    std::cout << "N1*A non-negative: " << c1.size() << "\n";
    std::cout << "N2*A non-negative: " << c2.size() << "\n";
    if (!out.empty()) {
        json arr = json::array();
        for (const auto& e : sign_quotient ? full_signs : full) arr.push_back(rational_matrix_to_json(e.matrix));
        write_json_file(out, arr);
    }
    return ok;
}

int cmd_check_variety(const std::vector<double>& values, std::size_t d, int b, bool squared, double tol) {
    VarietyPoint point(values, d);
    const auto member = squared ? on_M(point, tol) : on_L(point, tol);
    std::cout << "on_variety: " << (member.on_variety ? "yes" : "no") << "\n";
    std::cout << "residual: " << member.residual << "\n";
    if (d == 2 && !squared) {
        const double dist = l24_singular_distance(point);
        const auto rank = rational_rank_2d(values, b, dist <= kDefaultSingularTol);
        std::cout << "singular_distance: " << dist << "\n";
        std::cout << "rank_lower_bound: " << rank.rank_lower_bound << "\n";
        std::cout << "full_rank: " << (rank.certified_full ? "yes" : "no") << "\n";
        if (rank.found_relation) {
            std::cout << "relation:";
            for (auto c : *rank.found_relation) std::cout << " " << c;
            std::cout << "\n";
        }
    }
    return ok;
}

int cmd_plot(const std::string& result_path, const std::string& sidecar_path, const std::string& out) {
    const auto result = result_from_json(read_json_file(result_path));
    std::optional<Configuration> truth;
    if (!sidecar_path.empty()) truth = sidecar_from_json(read_json_file(sidecar_path)).configuration;
    const auto svg = render_svg(result.configuration, truth);
    std::ofstream f(out);
    if (!f) throw FormatError("cannot write " + out);
    f << svg;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reconstruct point configurations from unlabeled path and loop lengths"};
    app.require_subcommand(1);

    ExperimentSpec spec;
    std::string mode_name = "loop", out, sidecar;
    auto* sim = app.add_subcommand("simulate", "sample a configuration and write a shuffled dataset");
    sim->add_option("--points,-n", spec.n, "number of points")->default_val(6);
    sim->add_option("--dimension,-d", spec.d, "ambient dimension")->default_val(2);
    sim->add_option("--mode", mode_name, "path | loop | edge")->default_val("loop");
    sim->add_option("--bound,-b", spec.b, "bounce bound")->default_val(2);
    sim->add_option("--extra", spec.extra, "extra random walks")->default_val(0);
    sim->add_option("--seed", spec.seed, "seed")->default_val(0);
    sim->add_flag("--restricted-3d", spec.restricted_3d, "pings and triangles through one vertex only");
    sim->add_option("--out,-o", out, "dataset path")->required();
    sim->add_option("--sidecar", sidecar, "ground truth path (default <out>.truth.json)");

    std::string input;
    ReconstructionOptions ropts;
    std::string rec_out;
    auto* rec = app.add_subcommand("reconstruct", "reconstruct from a dataset file (never reads ground truth)");
    rec->add_option("dataset", input, "dataset JSON")->required();
    rec->add_option("--tolerance", ropts.membership_tol, "membership tolerance")->default_val(ropts.membership_tol);
    rec->add_flag("--restricted-3d", ropts.restricted_3d, "assert the single-anchor ensemble (d = 3)");
    rec->add_flag("--squared", ropts.squared, "edge mode values are squared lengths");
    rec->add_option("--out,-o", rec_out, "result path (default stdout)");

    std::string group_out;
    bool sign_quotient = false;
    auto* grp = app.add_subcommand("verify-group", "close the symmetry group exactly and print its orders");
    grp->add_option("--out,-o", group_out, "write the group as JSON rational matrices");
    grp->add_flag("--sign-quotient", sign_quotient, "export the sign-and-scale quotient");

    std::vector<double> values;
    std::size_t vd = 2;
    int vb = 2;
    bool squared = false;
    double vtol = kDefaultMembershipTol;
    auto* var = app.add_subcommand("check-variety", "membership, singular locus and rank of one tuple");
    var->add_option("values", values, "D coordinates")->required();
    var->add_option("--dimension,-d", vd, "dimension")->default_val(2);
    var->add_option("--bound,-b", vb, "bounce bound for the relation search")->default_val(2);
    var->add_option("--tolerance", vtol, "membership tolerance")->default_val(kDefaultMembershipTol);
    var->add_flag("--squared", squared, "values are squared lengths");

    std::string result_path, plot_sidecar, plot_out;
    auto* plt = app.add_subcommand("plot", "SVG of a reconstruction, with ground truth if given");
    plt->add_option("result", result_path, "result JSON")->required();
    plt->add_option("--sidecar", plot_sidecar, "ground truth JSON");
    plt->add_option("--out,-o", plot_out, "SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            spec.mode = parse_mode(mode_name);
            return cmd_simulate(spec, out, sidecar);
        }
        if (*rec) return cmd_reconstruct(input, rec_out, ropts);
        if (*grp) return cmd_verify_group(group_out, sign_quotient);
        if (*var) return cmd_check_variety(values, vd, vb, squared, vtol);
        if (*plt) return cmd_plot(result_path, plot_sidecar, plot_out);
    } catch (const UnsupportedDimension& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return unsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    }
    return io_error;
}
