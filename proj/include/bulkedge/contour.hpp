#pragma once

#include <optional>
#include <vector>

#include "bulkedge/types.hpp"

namespace bulkedge {

// An oriented simple closed curve in the complex plane. Orientation is
// always counterclockwise; polyline vertex lists are reversed on
// construction if they come in clockwise.
class Contour {
 public:
  enum class Kind { Circle, Ellipse, Polyline };

  struct Node {
    cplx z;       // point on the curve
    cplx weight;  // z'(t) * dt, so that oint f dz ~ sum f(z) * weight
  };

  static Contour circle(cplx center, double radius, int quadrature_nodes = 128);
  static Contour ellipse(cplx center, double semi_x, double semi_y,
                         double rotation = 0.0, int quadrature_nodes = 128);
  static Contour polyline(std::vector<cplx> vertices, int quadrature_nodes = 128);
  static Contour unit_circle(int quadrature_nodes = 128) {
    return circle(cplx(0, 0), 1.0, quadrature_nodes);
  }

  Kind kind() const { return kind_; }
  int quadrature_nodes() const { return nodes_; }
  Contour with_nodes(int m) const;

  // Point at parameter t in [0, 1): angle parameter for circle/ellipse,
  // arclength parameter for polylines.
  cplx point(double t) const;

  // Point at normalized arclength s in [0, 1).
  cplx point_arclength(double s) const;

  std::vector<Node> quadrature(int m) const;
  std::vector<Node> quadrature() const { return quadrature(nodes_); }

  bool contains(cplx p) const;
  double distance(cplx p) const;

  // Signed distance: positive inside, negative outside.
  double signed_distance(cplx p) const {
    return contains(p) ? distance(p) : -distance(p);
  }

  double diameter() const;

  // Circle accessors (valid only for Kind::Circle).
  cplx circle_center() const { return center_; }
  double circle_radius() const { return radius_x_; }

  cplx ellipse_center() const { return center_; }
  double ellipse_semi_x() const { return radius_x_; }
  double ellipse_semi_y() const { return radius_y_; }
  double ellipse_rotation() const { return rotation_; }
  const std::vector<cplx>& polyline_vertices() const { return vertices_; }

 private:
  Contour() = default;

  Kind kind_ = Kind::Circle;
  int nodes_ = 128;
  cplx center_{0, 0};
  double radius_x_ = 1.0;  // radius, or semi-axis along the rotated x-axis
  double radius_y_ = 1.0;
  double rotation_ = 0.0;
  std::vector<cplx> vertices_;
  std::vector<double> cum_length_;  // cumulative edge lengths for polylines
};

}  // namespace bulkedge
