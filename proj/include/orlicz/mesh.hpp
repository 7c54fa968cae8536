#pragma once

#include <array>
#include <functional>
#include <memory>
#include <vector>

namespace orlicz {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Axis-aligned box; y bounds are ignored in 1D.
struct Extent {
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
};

// P1 simplex: 2 nodes in 1D, 3 in 2D.
struct Element {
  std::array<int, 3> nodes{};
  int count = 0;
  double measure = 0.0;
  std::array<Point, 3> grad{};  // gradients of the local basis functions
};

// One Gauss point of one element. Ids run e * points_per_element + q.
struct QuadPoint {
  Point x;
  double weight = 0.0;  // includes the element measure
  int element = 0;
  std::array<double, 3> bary{};
};

class Mesh {
 public:
  int dim = 1;
  Extent extent;
  int resolution = 0;
  double h = 0.0;  // x spacing
  std::vector<Point> nodes;
  std::vector<Element> elements;
  std::vector<int> boundary_nodes;
  std::vector<char> is_boundary;
  std::vector<int> interior_nodes;
  std::vector<QuadPoint> quad;
  std::vector<double> element_measures;
  std::vector<double> quad_weights;
  int points_per_element = 3;
  double diam = 0.0;

  int node_count() const { return static_cast<int>(nodes.size()); }
  double measure() const;
  // Element containing p (clamped into the box).
  int locate(Point p) const;
};

using MeshPtr = std::shared_ptr<const Mesh>;

/// Uniform mesh: intervals in 1D, a resolution x resolution grid of squares
/// cut along the main diagonal in 2D. Throws BadResolution below 2.
MeshPtr make_mesh(int dim, Extent extent, int resolution);

/// Nodal P1 function.
class DiscreteFunction {
 public:
  MeshPtr mesh;
  std::vector<double> values;
  bool zero_trace = true;

  DiscreteFunction() = default;
  DiscreteFunction(MeshPtr m, bool zero_trace = true);
  DiscreteFunction(MeshPtr m, std::vector<double> v, bool zero_trace = true);

  /// Nodal interpolant; boundary values are pinned to 0 when zero_trace.
  static DiscreteFunction interpolate(MeshPtr m, const std::function<double(Point)>& fn, bool zero_trace = true);

  double evaluate(Point p) const;
  Point gradient(int element) const;
  // |grad u| per element.
  std::vector<double> gradient_norms() const;
  // u at every mesh quadrature point.
  std::vector<double> at_quadrature() const;
  double sup_norm() const;
  bool boundary_is_zero() const;
};

DiscreteFunction operator+(const DiscreteFunction& a, const DiscreteFunction& b);
DiscreteFunction operator-(const DiscreteFunction& a, const DiscreteFunction& b);
DiscreteFunction operator*(double s, const DiscreteFunction& a);

}  // namespace orlicz
