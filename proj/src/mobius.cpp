#include "bulkedge/mobius.hpp"

namespace bulkedge {

Contour circle_through(cplx z1, cplx z2, cplx z3, int quadrature_nodes) {
  // Solve |w - z1| = |w - z2| = |w - z3| as a 2x2 real linear system.
  Eigen::Matrix2d M;
  Eigen::Vector2d rhs;
  M << 2.0 * (z2.real() - z1.real()), 2.0 * (z2.imag() - z1.imag()),
      2.0 * (z3.real() - z1.real()), 2.0 * (z3.imag() - z1.imag());
  rhs << std::norm(z2) - std::norm(z1), std::norm(z3) - std::norm(z1);
  if (std::abs(M.determinant()) < 1e-14 * (1.0 + std::abs(z1) + std::abs(z2) + std::abs(z3)))
    throw std::invalid_argument("circle_through: points are collinear");
  Eigen::Vector2d w = M.partialPivLu().solve(rhs);
  cplx center(w(0), w(1));
  return Contour::circle(center, std::abs(z1 - center), quadrature_nodes);
}

Contour mobius_circle_image(const MobiusTransform& m, const Contour& circle) {
  if (circle.kind() != Contour::Kind::Circle)
    throw std::invalid_argument("mobius_circle_image: contour must be a circle");
  if (!m.valid()) throw std::invalid_argument("mobius_circle_image: degenerate map");
  if (std::abs(m.c) > 0) {
    cplx pole = -m.d / m.c;
    if (circle.distance(pole) < 1e-10 * circle.diameter())
      throw ValidationError("mobius_circle_image: pole lies on the circle");
  }
  cplx p1 = m.apply(circle.point(0.0));
  cplx p2 = m.apply(circle.point(1.0 / 3.0));
  cplx p3 = m.apply(circle.point(2.0 / 3.0));
  return circle_through(p1, p2, p3, circle.quadrature_nodes());
}

}  // namespace bulkedge
