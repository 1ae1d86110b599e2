#pragma once

#include <functional>

#include "bulkedge/contour.hpp"
#include "bulkedge/types.hpp"

namespace bulkedge {

// (1 / 2*pi*i) * oint (z I - A)^{-1} dz over the contour, trapezoid rule
// with m nodes.
Matrix resolvent_contour_integral(const Matrix& A, const Contour& c, int m);

// (1 / 2*pi*i) * oint (z B - A)^{-1} B dz for a regular pencil; handles
// singular B (infinite eigenvalues stay outside every finite contour).
Matrix pencil_contour_integral(const Matrix& A, const Matrix& B, const Contour& c, int m);

struct ResolvedProjector {
  Matrix projector;  // numerically idempotent
  Matrix frame;      // orthonormal basis of the range (n x rank)
  int rank = 0;
  int nodes_used = 0;
};

// Evaluates `integrate(m)` with doubling m until the singular values of the
// result split into clusters near >=1 and 0 (threshold 0.5, cluster bounds
// 0.75 / 0.25). Throws ResolutionError when the cap is reached unresolved.
ResolvedProjector resolve_projector(const std::function<Matrix(int)>& integrate,
                                    int m0, int cap = 1 << 17);

}  // namespace bulkedge
