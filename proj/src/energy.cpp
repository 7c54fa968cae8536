#include "orlicz/energy.hpp"

#include <cmath>

#include "orlicz/error.hpp"
#include "orlicz/kernels.hpp"

namespace orlicz {
namespace {

constexpr double kMinGradient = 1e-12;

void require_trace(const DiscreteFunction& u) {
  if (!u.boundary_is_zero()) throw Error(ErrorKind::NonzeroBoundary, "energy needs a zero-trace function");
}

}  // namespace

EnergyFunctional make_energy(NFunction phi, std::shared_ptr<const Rhs> rhs, double lambda, MeshPtr mesh) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::ParamOutOfRange, "lambda must be > 0");
  return EnergyFunctional{std::move(phi), std::move(rhs), lambda, std::move(mesh)};
}

double gradient_modular(const NFunction& phi, const DiscreteFunction& u) {
  auto g = u.gradient_norms();
  for (double& v : g) v = phi.value(v);
  return kernels::dot(u.mesh->element_measures, g);
}

double rhs_integral(const Rhs& rhs, const DiscreteFunction& u) {
  auto vals = u.at_quadrature();
  const Mesh& m = *u.mesh;
  for (std::size_t i = 0; i < vals.size(); ++i) vals[i] = rhs.F(Site{m.quad[i].x, static_cast<int>(i)}, vals[i]);
  return kernels::dot(m.quad_weights, vals);
}

double energy(const EnergyFunctional& E, const DiscreteFunction& u) {
  require_trace(u);
  return gradient_modular(E.phi, u) - E.lambda * rhs_integral(*E.rhs, u);
}

std::vector<double> residual(const NFunction& phi, const Rhs& rhs, double lambda, const DiscreteFunction& u) {
  require_trace(u);
  const Mesh& m = *u.mesh;
  std::vector<double> r(m.nodes.size(), 0.0);
  for (int e = 0; e < static_cast<int>(m.elements.size()); ++e) {
    const Element& el = m.elements[e];
    const Point g = u.gradient(e);
    const double a = std::hypot(g.x, g.y);
    if (a == 0.0) continue;
    const double w = el.measure * phi.flux(a) / a;
    for (int k = 0; k < el.count; ++k) r[el.nodes[k]] += w * (g.x * el.grad[k].x + g.y * el.grad[k].y);
  }
  const auto uq = u.at_quadrature();
  for (std::size_t i = 0; i < uq.size(); ++i) {
    const QuadPoint& q = m.quad[i];
    const double fv = lambda * q.weight * rhs.f(Site{q.x, static_cast<int>(i)}, uq[i]);
    const Element& el = m.elements[q.element];
    for (int k = 0; k < el.count; ++k) r[el.nodes[k]] -= fv * q.bary[k];
  }
  for (const int b : m.boundary_nodes) r[b] = 0.0;
  return r;
}

std::vector<double> residual(const EnergyFunctional& E, const DiscreteFunction& u) {
  return residual(E.phi, *E.rhs, E.lambda, u);
}

SparseMatrix hessian(const EnergyFunctional& E, const DiscreteFunction& u, HessianKind kind) {
  require_trace(u);
  const Mesh& m = *u.mesh;
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(m.elements.size() * 9 + m.quad.size() * 9 + m.nodes.size());
  auto add = [&](int i, int j, double v) {
    if (!m.is_boundary[i] && !m.is_boundary[j]) trip.emplace_back(i, j, v);
  };
  for (int e = 0; e < static_cast<int>(m.elements.size()); ++e) {
    const Element& el = m.elements[e];
    const Point g = u.gradient(e);
    const double a0 = std::hypot(g.x, g.y);
    const double a = std::max(a0, kMinGradient);
    const double iso = E.phi.flux(a) / a;
    const double along = E.phi.curvature(a);
    // Direction is arbitrary on flat elements; use x.
    const Point d = a0 > 0.0 ? Point{g.x / a0, g.y / a0} : Point{1.0, 0.0};
    for (int i = 0; i < el.count; ++i)
      for (int j = 0; j < el.count; ++j) {
        const double gi = el.grad[i].x * d.x + el.grad[i].y * d.y;
        const double gj = el.grad[j].x * d.x + el.grad[j].y * d.y;
        const double dotij = el.grad[i].x * el.grad[j].x + el.grad[i].y * el.grad[j].y;
        add(el.nodes[i], el.nodes[j], el.measure * (iso * (dotij - gi * gj) + along * gi * gj));
      }
  }
  const auto uq = u.at_quadrature();
  for (std::size_t q = 0; q < uq.size(); ++q) {
    const QuadPoint& qp = m.quad[q];
    double d = E.rhs->df(Site{qp.x, static_cast<int>(q)}, uq[q]);
    if (kind == HessianKind::Convexified) d = std::min(d, 0.0);
    if (d == 0.0) continue;
    const Element& el = m.elements[qp.element];
    const double w = -E.lambda * qp.weight * d;
    for (int i = 0; i < el.count; ++i)
      for (int j = 0; j < el.count; ++j) add(el.nodes[i], el.nodes[j], w * qp.bary[i] * qp.bary[j]);
  }
  for (const int b : m.boundary_nodes) trip.emplace_back(b, b, 1.0);
  SparseMatrix H(m.node_count(), m.node_count());
  H.setFromTriplets(trip.begin(), trip.end());
  return H;
}

SparseMatrix stiffness(const Mesh& m) {
  std::vector<Eigen::Triplet<double>> trip;
  for (const Element& el : m.elements)
    for (int i = 0; i < el.count; ++i)
      for (int j = 0; j < el.count; ++j) {
        const int a = el.nodes[i], b = el.nodes[j];
        if (m.is_boundary[a] || m.is_boundary[b]) continue;
        trip.emplace_back(a, b, el.measure * (el.grad[i].x * el.grad[j].x + el.grad[i].y * el.grad[j].y));
      }
  for (const int b : m.boundary_nodes) trip.emplace_back(b, b, 1.0);
  SparseMatrix K(m.node_count(), m.node_count());
  K.setFromTriplets(trip.begin(), trip.end());
  return K;
}

DomDiagnostics dom_diagnostics(const NFunction& phi, const DiscreteFunction& u) {
  require_trace(u);
  DomDiagnostics out;
  const Complementary tilde(phi);
  const auto g = u.gradient_norms();
  double pairing = 0.0;
  for (std::size_t e = 0; e < g.size(); ++e) {
    const double w = u.mesh->elements[e].measure;
    const double s = phi.flux(g[e]);
    out.modular_phi += w * phi.value(g[e]);
    out.modular_tilde += w * tilde.value(s);
    pairing += w * s * g[e];
  }
  out.identity_gap = std::fabs(pairing - (out.modular_phi + out.modular_tilde));
  out.relative_gap = pairing > 0.0 ? out.identity_gap / pairing : 0.0;
  return out;
}

}  // namespace orlicz
