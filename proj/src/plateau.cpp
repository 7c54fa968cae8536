#include <algorithm>
#include <cmath>
#include <sstream>

#include "orlicz/error.hpp"
#include "orlicz/solver.hpp"

namespace orlicz {
namespace {

// Ramps of kx (and ky) cells from each side; exact nodal fractions.
PlateauFunction build(MeshPtr mesh, double t1, int kx, int ky) {
  PlateauFunction p;
  p.t1 = t1;
  p.ramp_width = kx * mesh->h;
  p.profile = DiscreteFunction(mesh, true);
  const int n = mesh->resolution;
  for (int k = 0; k < mesh->node_count(); ++k) {
    const int i = mesh->dim == 1 ? k : k % (n + 1);
    double frac = std::min(1.0, static_cast<double>(std::min(i, n - i)) / kx);
    if (mesh->dim == 2) {
      const int j = k / (n + 1);
      frac = std::min(frac, static_cast<double>(std::min(j, n - j)) / ky);
    }
    p.profile.values[k] = t1 * frac;
    if (frac == 1.0) p.inner_nodes.push_back(k);
  }
  return p;
}

int cells(double width, double spacing, int n) {
  return std::clamp(static_cast<int>(std::lround(width / spacing)), 1, n / 2);
}

}  // namespace

PlateauFunction make_plateau(MeshPtr mesh, double t1, double ramp_width) {
  const int n = mesh->resolution;
  const int kx = cells(ramp_width, mesh->h, n);
  const int ky = mesh->dim == 2 ? cells(ramp_width, (mesh->extent.y1 - mesh->extent.y0) / n, n) : 1;
  return build(std::move(mesh), t1, kx, ky);
}

LambdaStar lambda_star(const NFunction& phi, const Rhs& f, MeshPtr mesh, double t1, int levels) {
  if (!(t1 > 0.0)) throw Error(ErrorKind::NoPositivePlateau, "t1 must be positive");
  const int n = mesh->resolution;
  for (int k = 1; k <= levels; ++k) {
    const double inner = static_cast<double>(k) / (levels + 1);
    const int cells_per_ramp = std::clamp(static_cast<int>(std::lround((1.0 - inner) * n / 2.0)), 1, n / 2);
    PlateauFunction p = build(mesh, t1, cells_per_ramp, cells_per_ramp);
    const double fint = rhs_integral(f, p.profile);
    if (!(fint > 0.0)) continue;
    p.level = k;
    LambdaStar out;
    out.Q = gradient_modular(phi, p.profile);
    out.F_integral = fint;
    out.lambda_star = out.Q / fint;
    out.witness = std::move(p);
    return out;
  }
  std::ostringstream os;
  os << "int F(x, u0) <= 0 at all " << levels << " plateau levels (t1 = " << t1 << ")";
  throw Error(ErrorKind::NoPositivePlateau, os.str());
}

double witness_energy(const LambdaStar& ls, double lambda) { return ls.Q - lambda * ls.F_integral; }

}  // namespace orlicz
