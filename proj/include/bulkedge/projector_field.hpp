#pragma once

#include <vector>

#include "bulkedge/types.hpp"

namespace bulkedge {

// A field of rank-r subspaces of a fixed ambient C^n over an N1 x N2 torus
// grid (axis 1 first, fiber/contour axis second). Each node stores an
// orthonormal frame spanning the projector range at that node.
struct ProjectorField {
  int n1 = 0, n2 = 0;
  int ambient = 0;
  int rank = 0;
  std::vector<Matrix> frames;  // node (i, j) at index i * n2 + j

  const Matrix& frame(int i, int j) const {
    i = ((i % n1) + n1) % n1;
    j = ((j % n2) + n2) % n2;
    return frames[static_cast<size_t>(i) * n2 + j];
  }

  Matrix& frame_ref(int i, int j) { return frames[static_cast<size_t>(i) * n2 + j]; }

  // Orthonormality, constant rank, and neighbor-overlap resolution.
  // Overlap failures are resolution problems (refine the grid); the rest
  // indicate malformed data.
  void check_invariants() const;
};

}  // namespace bulkedge
