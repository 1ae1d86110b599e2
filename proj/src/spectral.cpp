#include "bulkedge/spectral.hpp"

namespace bulkedge {

Matrix resolvent_contour_integral(const Matrix& A, const Contour& c, int m) {
  const int n = static_cast<int>(A.rows());
  Matrix acc = Matrix::Zero(n, n);
  const Matrix id = Matrix::Identity(n, n);
  for (const auto& node : c.quadrature(m))
    acc += node.weight * (node.z * id - A).partialPivLu().solve(id);
  return acc / (2.0 * kPi * kImag);
}

Matrix pencil_contour_integral(const Matrix& A, const Matrix& B, const Contour& c, int m) {
  const int n = static_cast<int>(A.rows());
  Matrix acc = Matrix::Zero(n, n);
  for (const auto& node : c.quadrature(m))
    acc += node.weight * (node.z * B - A).partialPivLu().solve(B);
  return acc / (2.0 * kPi * kImag);
}

ResolvedProjector resolve_projector(const std::function<Matrix(int)>& integrate,
                                    int m0, int cap) {
  int m = std::max(m0, 16);
  while (true) {
    Matrix P = integrate(m);
    Eigen::BDCSVD<Matrix> svd(P, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const int n = static_cast<int>(sv.size());
    int rank = 0;
    while (rank < n && sv(rank) > 0.5) ++rank;
    bool upper_ok = rank == 0 || sv(rank - 1) >= 0.75;
    bool lower_ok = rank == n || sv(rank) <= 0.25;
    if (upper_ok && lower_ok) {
      ResolvedProjector out;
      out.projector = std::move(P);
      out.frame = svd.matrixU().leftCols(rank);
      out.rank = rank;
      out.nodes_used = m;
      return out;
    }
    if (m >= cap)
      throw ResolutionError("spectral projector not resolved; increase M");
    m *= 2;
  }
}

}  // namespace bulkedge
