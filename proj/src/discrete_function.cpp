#include <cmath>

#include "orlicz/error.hpp"
#include "orlicz/kernels.hpp"
#include "orlicz/mesh.hpp"

namespace orlicz {

DiscreteFunction::DiscreteFunction(MeshPtr m, bool zt)
    : mesh(std::move(m)), values(mesh->nodes.size(), 0.0), zero_trace(zt) {}

DiscreteFunction::DiscreteFunction(MeshPtr m, std::vector<double> v, bool zt)
    : mesh(std::move(m)), values(std::move(v)), zero_trace(zt) {
  if (values.size() != mesh->nodes.size())
    throw Error(ErrorKind::ParamOutOfRange, "nodal vector size does not match mesh");
}

DiscreteFunction DiscreteFunction::interpolate(MeshPtr m, const std::function<double(Point)>& fn, bool zt) {
  DiscreteFunction u(m, zt);
  for (int k = 0; k < m->node_count(); ++k) u.values[k] = (zt && m->is_boundary[k]) ? 0.0 : fn(m->nodes[k]);
  return u;
}

double DiscreteFunction::evaluate(Point p) const {
  const Element& el = mesh->elements[mesh->locate(p)];
  const Point p0 = mesh->nodes[el.nodes[0]];
  double v = values[el.nodes[0]];
  for (int k = 0; k < el.count; ++k) {
    // Linear function: u(p) = u(p0) + grad u . (p - p0)
    v += values[el.nodes[k]] * (el.grad[k].x * (p.x - p0.x) + el.grad[k].y * (p.y - p0.y));
  }
  return v;
}

Point DiscreteFunction::gradient(int e) const {
  const Element& el = mesh->elements[e];
  Point g;
  for (int k = 0; k < el.count; ++k) {
    g.x += values[el.nodes[k]] * el.grad[k].x;
    g.y += values[el.nodes[k]] * el.grad[k].y;
  }
  return g;
}

std::vector<double> DiscreteFunction::gradient_norms() const {
  const std::size_t ne = mesh->elements.size();
  std::vector<double> out(ne);
  if (mesh->dim == 1) {
    kernels::adjacent_diff(values, 1.0 / mesh->h, out);
    for (double& g : out) g = std::fabs(g);
    return out;
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const Point g = gradient(static_cast<int>(e));
    out[e] = std::hypot(g.x, g.y);
  }
  return out;
}

std::vector<double> DiscreteFunction::at_quadrature() const {
  std::vector<double> out(mesh->quad.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const QuadPoint& q = mesh->quad[i];
    const Element& el = mesh->elements[q.element];
    double v = 0.0;
    for (int k = 0; k < el.count; ++k) v += q.bary[k] * values[el.nodes[k]];
    out[i] = v;
  }
  return out;
}

double DiscreteFunction::sup_norm() const { return kernels::max_abs(values); }

bool DiscreteFunction::boundary_is_zero() const {
  for (const int k : mesh->boundary_nodes)
    if (values[k] != 0.0) return false;
  return true;
}

DiscreteFunction operator+(const DiscreteFunction& a, const DiscreteFunction& b) {
  DiscreteFunction r(a.mesh, a.zero_trace && b.zero_trace);
  kernels::add_scaled(a.values, 1.0, b.values, r.values);
  return r;
}

DiscreteFunction operator-(const DiscreteFunction& a, const DiscreteFunction& b) {
  DiscreteFunction r(a.mesh, a.zero_trace && b.zero_trace);
  kernels::add_scaled(a.values, -1.0, b.values, r.values);
  return r;
}

DiscreteFunction operator*(double s, const DiscreteFunction& a) {
  DiscreteFunction r(a.mesh, a.zero_trace);
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] = s * a.values[i];
  return r;
}

}  // namespace orlicz
