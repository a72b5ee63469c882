#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "confract/cauchy.hpp"
#include "confract/config.hpp"
#include "confract/conservation.hpp"
#include "confract/fundsol.hpp"
#include "confract/symmetry.hpp"

namespace confract {

struct Check {
    std::string name;
    double max_deviation;
    double tolerance;
    bool pass;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    void add(std::string name, double max_deviation, double tolerance);
    /// True when every check passes. NaN deviations fail.
    bool overall() const;
};

nlohmann::ordered_json to_json(const Report& report);

/// System named by the config. transformed33 yields the image system, power-transform the source power system.
SystemSpec build_system(const RunConfig& cfg);
/// Closed-form kernel of the configured system; the pushforward kernel for transformed33.
KernelMatrix build_kernel(const RunConfig& cfg);
TransformationData build_transformation(const RunConfig& cfg);
InitialData build_initial_data(const RunConfig& cfg);

/// Deterministic uniform draw in [-1, 1] from a 64-bit generator state.
double uniform_pm1(std::uint64_t& state);

/// u + 1e-2 x: not a solution of either system.
SolutionPair perturb_by_x(const SolutionPair& sol);

/// Max scaled residual of `sol` over the grid.
double max_residual(const SystemSpec& spec, const SolutionPair& sol, const std::vector<double>& xs,
                    const std::vector<double>& ts, TimeDerivative dt = TimeDerivative::conformable);
/// Max scaled divergence of `cv` over the grid.
double max_divergence(const ConservedVector& cv, const SolutionPair& sol, const std::vector<double>& xs,
                      const std::vector<double>& ts);

Report verify_residual(const RunConfig& cfg);
Report verify_laplace(const RunConfig& cfg);
Report verify_conservation(const RunConfig& cfg);
Report verify_group_orbit(const RunConfig& cfg);
Report verify_pushforward(const RunConfig& cfg);
/// Dispatch on cfg.suite; "all" concatenates every suite.
Report run_verify(const RunConfig& cfg);

}  // namespace confract
