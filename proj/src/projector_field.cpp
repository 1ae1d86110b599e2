#include "bulkedge/projector_field.hpp"

namespace bulkedge {

void ProjectorField::check_invariants() const {
  if (n1 < 2 || n2 < 2) throw ValidationError("projector field: grid too small");
  if (frames.size() != static_cast<size_t>(n1) * n2)
    throw ValidationError("projector field: frame count does not match grid");
  for (const Matrix& f : frames) {
    if (f.rows() != ambient || f.cols() != rank)
      throw ValidationError("projector field: rank not constant over the grid");
    if (rank > 0 &&
        max_abs(Matrix(f.adjoint() * f - Matrix::Identity(rank, rank))) > kFrameOrthoTol)
      throw ValidationError("projector field: frame not orthonormal");
  }
  if (rank == 0) return;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      for (const Matrix& nb : {frame(i + 1, j), frame(i, j + 1)}) {
        Matrix overlap = frame(i, j).adjoint() * nb;
        if (smallest_singular_value(overlap) < kNeighborOverlapMin)
          throw ResolutionError("projector field under-resolved; refine grid");
      }
    }
}

}  // namespace bulkedge
