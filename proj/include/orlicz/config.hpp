#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "orlicz/solver.hpp"

namespace orlicz {

// Flat "key = value" file, '#' starts a comment. Keys:
//   phi.name, phi.<param>           N-function from the catalog
//   f.name, f.<param>               right-hand side model
//   mesh.dim, mesh.extent, mesh.resolution
//   lambdas = a, b, ...  or  lambdas.min / lambdas.max / lambdas.count
//   lambdas.relative = true         values are multiples of the witness threshold
//   profile = T1 | T2
//   seed, workers, output_dir
//   tol.residual, tol.level, tol.order, tol.distinct, tol.identity
//   solver.path_points, solver.plateau_levels, solver.geometry_samples,
//   solver.random_starts, solver.mp_max_iter, solver.t1
struct ExperimentConfig {
  std::string phi_name;
  ParamMap phi_params;
  std::string f_name;
  ParamMap f_params;
  int dim = 1;
  Extent extent;
  int resolution = 64;
  std::vector<double> lambdas;
  bool lambdas_relative = false;
  Profile profile = Profile::T1;
  std::uint64_t seed = 1;
  int workers = 1;
  std::string output_dir = "out";
  SolverOptions solver;
};

/// Throws ConfigParse naming the line and key.
ExperimentConfig parse_config(std::istream& in, const std::string& source = "<config>");
ExperimentConfig load_config(const std::string& path);

/// Catalog lookups with failures reported as ConfigParse.
NFunction config_phi(const ExperimentConfig& cfg);
NonlinearityPtr config_f(const ExperimentConfig& cfg);
MeshPtr config_mesh(const ExperimentConfig& cfg);

/// Closed-form expression in x, y with + - * / ^, unary minus, pi, e and
/// sin cos tan exp log sqrt abs. Throws ConfigParse.
std::function<double(Point)> parse_expression(const std::string& text);

}  // namespace orlicz
