#pragma once

#include "bulkedge/contour.hpp"
#include "bulkedge/types.hpp"

namespace bulkedge {

// Fractional linear map z -> (a z + b) / (c z + d) with ad - bc != 0.
struct MobiusTransform {
  cplx a{1, 0}, b{0, 0}, c{0, 0}, d{1, 0};

  static MobiusTransform identity() { return {}; }

  // mu_p(z) = 1 / (z - p).
  static MobiusTransform reciprocal_at(cplx p) { return {{0, 0}, {1, 0}, {1, 0}, -p}; }

  cplx determinant() const { return a * d - b * c; }

  bool valid(double tol = 1e-12) const {
    double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d), 1.0});
    return std::abs(determinant()) > tol * scale * scale;
  }

  cplx apply(cplx z) const { return (a * z + b) / (c * z + d); }

  MobiusTransform inverse() const { return {d, -b, -c, a}; }

  MobiusTransform compose(const MobiusTransform& rhs) const {
    return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
            c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
  }
};

// Circle through three points (throws when collinear).
Contour circle_through(cplx z1, cplx z2, cplx z3, int quadrature_nodes = 128);

// Image of a circle under a Mobius map whose pole avoids the circle.
// The image of a circle not through the pole is again a circle.
Contour mobius_circle_image(const MobiusTransform& m, const Contour& circle);

}  // namespace bulkedge
