#pragma once

#include "bulkedge/configspace.hpp"
#include "bulkedge/projector_field.hpp"

namespace bulkedge {

// Configuration of a degree-l polynomial over the whole plane: the
// companion pair with full-plane region, rank exactly d*l. Polynomials with
// a singular leading coefficient go through a Mobius chart when permitted;
// that route fails if det p degenerates at infinity.
Configuration conf_plane(const MatrixLaurentPoly& p, double tol = kInvertibilityTol,
                         bool allow_chart = true);

// Restriction of conf_plane to the interior of the contour. The resulting
// rank is cross-checked against the argument-principle winding number.
Configuration conf_region(const MatrixLaurentPoly& p, const Contour& c,
                          double tol = kInvertibilityTol);

enum class Linearization { CompanionPencil, MobiusChart };

// Grid-indexed polynomial family over a 2-torus (axis 1 = parameter,
// axis 2 = second parameter/contour position).
struct PolyFamily {
  int n1 = 0, n2 = 0;
  std::vector<MatrixLaurentPoly> polys;

  const MatrixLaurentPoly& at(int i, int j) const {
    return polys[static_cast<size_t>(i) * n2 + j];
  }
};

// Companion pencil (A, B) with B = diag(I, ..., I, a_l); regular whenever
// det p is not identically zero, including singular leading coefficients.
void companion_pencil(const MatrixLaurentPoly& p, Matrix* A, Matrix* B);

// Fiberwise spectral subspaces of the linearized family inside the contour,
// expressed in one fixed ambient C^{d l}. Rank must be constant over the
// grid; a jump aborts. The MobiusChart backend selects one shared chart
// point for the whole family.
ProjectorField bun_family(const PolyFamily& family, const Contour& c,
                          double tol = kInvertibilityTol,
                          Linearization backend = Linearization::CompanionPencil);

}  // namespace bulkedge
