#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "confract/conformable.hpp"
#include "confract/systems.hpp"

namespace confract {

using PointField = std::function<double(double x, double t, double u, double v)>;

/// xi d/dx + tau d/dt + eta d/du + phi d/dv
struct VectorField {
    PointField xi;
    PointField tau;
    PointField eta;
    PointField phi;
    std::string name;
};

/// Order: V1, V2, V3, V4, V5, V_eta3, V_phi3. eta3/phi3 default to zero fields.
std::vector<VectorField> lie_basis_example31(double a, double b, Order alpha, ScalarField eta3 = {},
                                             ScalarField phi3 = {});
std::vector<VectorField> lie_basis_eq3(double c, double m, double n, Order alpha, ScalarField eta3 = {},
                                       ScalarField phi3 = {});

enum class Generator { v1, v2, v3, v4, v5 };

/// Laplace-dual parameter of the invariant families.
double lambda_from_epsilon_example31(double eps, Order alpha);
double lambda_from_epsilon_eq3(double eps, Order alpha);

/// Group law of every one-parameter flow here: eps1 then eps2 equals eps1 + eps2.
inline double compose_epsilon(double eps1, double eps2) { return eps1 + eps2; }

SolutionPair flow_v3_example31(const SolutionPair& sol, double eps, const Example31Params& p, Order alpha);
SolutionPair flow_v3_eq3(const SolutionPair& sol, double eps, const Eq3Params& p, Order alpha);

SolutionPair flow_example31(Generator g, const SolutionPair& sol, double eps, const Example31Params& p, Order alpha);
SolutionPair flow_eq3(Generator g, const SolutionPair& sol, double eps, const Eq3Params& p, Order alpha);

/// V_eta3 / V_phi3 act by superposition: (u, v) + eps (eta3, phi3).
SolutionPair superpose(const SolutionPair& sol, double eps, const SolutionPair& null_pair);

/// which = 1: (1, s/a); which = 2: x^{1+s} (1, -s/a).
SolutionPair steady_seed_example31(int which, const Example31Params& p);
/// which = 1: (1, q/m); which = 2: x^{1+q-c} (-q/n, 1).
SolutionPair steady_seed_eq3(int which, const Eq3Params& p);

/// Columns are the two steady seeds evaluated at y.
Eigen::Matrix2d steady_matrix_example31(double y, const Example31Params& p);
Eigen::Matrix2d steady_matrix_eq3(double y, const Eq3Params& p);

Eigen::Matrix2d invariant_family_example31(double lambda, double x, double t, const Example31Params& p, Order alpha);
Eigen::Matrix2d invariant_family_eq3(double lambda, double x, double t, const Eq3Params& p, Order alpha);

/// Column `col` (0 or 1) of the invariant family as an analytic solution pair.
SolutionPair family_column_example31(int col, double lambda, const Example31Params& p, Order alpha);
SolutionPair family_column_eq3(int col, double lambda, const Eq3Params& p, Order alpha);

}  // namespace confract
