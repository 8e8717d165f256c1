#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "unlabeled/geometry.hpp"
#include "unlabeled/measurement.hpp"
#include "unlabeled/reconstruction.hpp"
#include "unlabeled/symmetry_group.hpp"

namespace unlabeled {

using nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kGeneratorVersion = "unlabeled-1";

struct ExperimentSpec {
    std::size_t n = 6;
    std::size_t d = 2;
    MeasurementMode mode = MeasurementMode::loop;
    int b = 2;
    std::size_t extra = 0;
    std::uint64_t seed = 0;
    bool restricted_3d = false;
};

void validate(const ExperimentSpec& spec);

/// Ground truth kept apart from the dataset: the configuration, the ensemble,
/// and which walk produced each dataset value (value p came from walk permutation[p]).
struct Sidecar {
    Configuration configuration;
    MeasurementEnsemble ensemble;
    std::vector<std::size_t> permutation;
};

struct Simulation {
    UnlabeledDataSet data;
    Sidecar sidecar;
};

Simulation simulate(const ExperimentSpec& spec);

json dataset_to_json(const UnlabeledDataSet& data, const json& meta = nullptr);
UnlabeledDataSet dataset_from_json(const json& j);

json configuration_to_json(const Configuration& config);
Configuration configuration_from_json(const json& j);

json walk_to_json(const Walk& w);
Walk walk_from_json(const json& j);

json sidecar_to_json(const Sidecar& s);
Sidecar sidecar_from_json(const json& j);

json result_to_json(const ReconstructionResult& r);

struct ResultFile {
    std::size_t n = 0;
    Configuration configuration;
    double scale = 1.0;
};
ResultFile result_from_json(const json& j);

/// 6x6 rational matrix as rows of [numerator, denominator] string pairs.
json rational_matrix_to_json(const RationalMatrix& m);
RationalMatrix rational_matrix_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Planar scatter of the reconstruction, with the ground truth aligned onto it
/// when given. Only the first two coordinates are drawn.
std::string render_svg(const Configuration& reconstruction, const std::optional<Configuration>& truth);

}  // namespace unlabeled
