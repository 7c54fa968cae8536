#include "orlicz/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "orlicz/error.hpp"

namespace orlicz {
namespace {

void add_quadrature(Mesh& m) {
  std::vector<std::array<double, 3>> bary;
  std::vector<double> w;
  if (m.dim == 1) {
    const double r = std::sqrt(0.6);
    for (const double xi : {-r, 0.0, r}) bary.push_back({0.5 * (1.0 - xi), 0.5 * (1.0 + xi), 0.0});
    w = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
  } else {
    const double a = 2.0 / 3.0, b = 1.0 / 6.0;
    bary = {{a, b, b}, {b, a, b}, {b, b, a}};
    w = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  }
  m.points_per_element = static_cast<int>(w.size());
  m.quad.reserve(m.elements.size() * w.size());
  for (int e = 0; e < static_cast<int>(m.elements.size()); ++e) {
    const Element& el = m.elements[e];
    for (std::size_t q = 0; q < w.size(); ++q) {
      QuadPoint qp;
      qp.element = e;
      qp.bary = bary[q];
      qp.weight = w[q] * el.measure;
      for (int k = 0; k < el.count; ++k) {
        qp.x.x += bary[q][k] * m.nodes[el.nodes[k]].x;
        qp.x.y += bary[q][k] * m.nodes[el.nodes[k]].y;
      }
      m.quad.push_back(qp);
      m.quad_weights.push_back(qp.weight);
    }
    m.element_measures.push_back(el.measure);
  }
}

Element triangle(const Mesh& m, int a, int b, int c) {
  Element el;
  el.nodes = {a, b, c};
  el.count = 3;
  const Point p0 = m.nodes[a], p1 = m.nodes[b], p2 = m.nodes[c];
  const double det = (p1.x - p0.x) * (p2.y - p0.y) - (p2.x - p0.x) * (p1.y - p0.y);
  el.measure = 0.5 * std::fabs(det);
  el.grad[0] = {(p1.y - p2.y) / det, (p2.x - p1.x) / det};
  el.grad[1] = {(p2.y - p0.y) / det, (p0.x - p2.x) / det};
  el.grad[2] = {(p0.y - p1.y) / det, (p1.x - p0.x) / det};
  return el;
}

}  // namespace

double Mesh::measure() const {
  return dim == 1 ? extent.x1 - extent.x0 : (extent.x1 - extent.x0) * (extent.y1 - extent.y0);
}

int Mesh::locate(Point p) const {
  const int n = resolution;
  const double fx = (p.x - extent.x0) / h;
  const int i = std::clamp(static_cast<int>(std::floor(fx)), 0, n - 1);
  if (dim == 1) return i;
  const double hy = (extent.y1 - extent.y0) / n;
  const double fy = (p.y - extent.y0) / hy;
  const int j = std::clamp(static_cast<int>(std::floor(fy)), 0, n - 1);
  const bool lower = (fy - j) <= (fx - i);
  return 2 * (j * n + i) + (lower ? 0 : 1);
}

MeshPtr make_mesh(int dim, Extent extent, int resolution) {
  if (resolution < 2) throw Error(ErrorKind::BadResolution, "resolution must be >= 2");
  if (dim != 1 && dim != 2) throw Error(ErrorKind::BadResolution, "dim must be 1 or 2");
  if (!(extent.x1 > extent.x0) || (dim == 2 && !(extent.y1 > extent.y0)))
    throw Error(ErrorKind::BadResolution, "empty extent");
  auto m = std::make_shared<Mesh>();
  const int n = resolution;
  m->dim = dim;
  m->extent = extent;
  m->resolution = n;
  m->h = (extent.x1 - extent.x0) / n;
  if (dim == 1) {
    for (int i = 0; i <= n; ++i) m->nodes.push_back({extent.x0 + (extent.x1 - extent.x0) * i / n, 0.0});
    for (int i = 0; i < n; ++i) {
      Element el;
      el.nodes = {i, i + 1, 0};
      el.count = 2;
      el.measure = m->nodes[i + 1].x - m->nodes[i].x;
      el.grad[0] = {-1.0 / el.measure, 0.0};
      el.grad[1] = {1.0 / el.measure, 0.0};
      m->elements.push_back(el);
    }
    m->diam = extent.x1 - extent.x0;
  } else {
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n; ++i)
        m->nodes.push_back({extent.x0 + (extent.x1 - extent.x0) * i / n, extent.y0 + (extent.y1 - extent.y0) * j / n});
    auto id = [n](int i, int j) { return j * (n + 1) + i; };
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        m->elements.push_back(triangle(*m, id(i, j), id(i + 1, j), id(i + 1, j + 1)));
        m->elements.push_back(triangle(*m, id(i, j), id(i + 1, j + 1), id(i, j + 1)));
      }
    m->diam = std::hypot(extent.x1 - extent.x0, extent.y1 - extent.y0);
  }
  m->is_boundary.assign(m->nodes.size(), 0);
  for (int k = 0; k < m->node_count(); ++k) {
    const int i = dim == 1 ? k : k % (n + 1);
    const int j = dim == 1 ? 1 : k / (n + 1);
    const bool b = i == 0 || i == n || j == 0 || j == n;
    m->is_boundary[k] = b;
    (b ? m->boundary_nodes : m->interior_nodes).push_back(k);
  }
  add_quadrature(*m);
  return m;
}

}  // namespace orlicz
