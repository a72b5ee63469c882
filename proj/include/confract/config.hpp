#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "confract/cauchy.hpp"
#include "confract/report.hpp"
#include "confract/systems.hpp"

namespace confract {

struct Axis {
    double min = 0;
    double max = 0;
    int count = 0;
    bool log = false;

    /// count == 1 requires min == max.
    std::vector<double> points() const;
};

struct GridSpec {
    Axis x{0.5, 2, 10, false};
    Axis t{0.3, 2, 10, false};
    Axis y{1, 1, 1, false};
};

struct InitialDataSpec {
    std::string kind = "gaussian";  // zero | seed | gaussian | bump | indicator | table
    double center = 1;
    double width = 0.25;
    double lo = 0.5;
    double hi = 2;
    double ramp = 0.2;
    int seed = 1;
    Eigen::Vector2d direction{1, 1};
    std::vector<double> ys, us, vs;
};

struct Tolerances {
    double residual = 1e-5;
    double laplace = 1e-6;
    double conservation = 1e-5;
    double group_orbit = 1e-5;
    double composition = 1e-8;
    double pushforward = 1e-4;
    double identity = 1e-12;
    double constraint = 1e-6;
    double coefficients = 1e-6;
};

struct RunConfig {
    std::string command;
    std::string system = "example31";  // example31 | eq2 | eq3 | transformed33 | power-transform
    std::map<std::string, double> params;
    double alpha = 1;
    GridSpec grid;
    DomainMargins margins;
    QuadratureConfig quadrature;
    InitialDataSpec initial;
    std::string transform = "identity";  // identity | example33 | power
    bool pushforward = false;            // transform command: emit the pushforward kernel instead of coefficients
    std::string output = "-";
    OutputFormat format = OutputFormat::csv;
    Tolerances tolerances;
    std::string suite = "all";
    bool perturb = false;
    std::uint64_t seed = 20240607;

    double param(const std::string& name) const;
};

/// Built-in presets: example31, eq3, transformed33, power-transform, negative-control.
RunConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

/// Overlay a JSON document onto `base`. Throws ConfigError naming the offending field.
void apply_json(RunConfig& cfg, const std::string& text, const std::string& source = "config");
RunConfig load_config_file(const std::string& path, const RunConfig& base);

/// "x=0.5:2:10,t=0.3:2:10,y=1:1:1" with an optional ":log" suffix per axis.
void apply_grid_flag(RunConfig& cfg, const std::string& spec);
/// "name=value"
void apply_param_flag(RunConfig& cfg, const std::string& spec);

/// Field-level checks; throws ConfigError.
void validate(const RunConfig& cfg);

nlohmann::ordered_json to_json(const RunConfig& cfg);

}  // namespace confract
