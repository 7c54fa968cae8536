#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "orlicz/mesh.hpp"
#include "orlicz/nfunction.hpp"

namespace testing_support {

struct Model {
  std::string name;
  orlicz::ParamMap params;
  bool delta2;        // expected Delta2 of Phi
  bool delta2_tilde;  // expected Delta2 of Phi~
};

// One instance of every catalog entry.
inline std::vector<Model> catalog_models() {
  return {
      {"power", {{"p", 4.0}}, true, true},
      {"powersum", {{"p", 2.0}, {"q", 3.0}}, true, true},
      {"genpower", {{"alpha", 1.5}}, true, true},
      {"plog", {{"p", 2.5}}, true, true},
      {"sinh", {{"alpha", 0.5}, {"beta", 1.0}}, true, true},
      {"exp", {}, false, true},
      {"loglinear", {}, true, false},
  };
}

// Random zero-trace function: a few smooth modes plus nodal noise.
inline orlicz::DiscreteFunction random_zero_trace(const orlicz::MeshPtr& mesh, std::mt19937_64& rng,
                                                  double amplitude = 1.0) {
  std::normal_distribution<double> normal(0.0, 1.0);
  double c[4];
  for (double& ci : c) ci = normal(rng);
  const double noise = 0.1 * std::fabs(normal(rng));
  const auto& ex = mesh->extent;
  auto u = orlicz::DiscreteFunction::interpolate(mesh, [&](orlicz::Point p) {
    const double sx = (p.x - ex.x0) / (ex.x1 - ex.x0);
    const double sy = mesh->dim == 2 ? (p.y - ex.y0) / (ex.y1 - ex.y0) : 0.5;
    double v = 0.0;
    for (int k = 0; k < 4; ++k) v += c[k] * std::sin((k + 1) * std::numbers::pi * sx) / (k + 1);
    return v * std::sin(std::numbers::pi * sy);
  });
  for (int i : mesh->interior_nodes) u.values[i] = amplitude * (u.values[i] + noise * normal(rng));
  return u;
}

inline double rel_err(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

}  // namespace testing_support
