#include "bulkedge/toeplitz.hpp"

namespace bulkedge {

ToeplitzTruncation truncate(const MatrixLaurentPoly& p, int n_sites) {
  if (n_sites <= p.neg_degree() + p.pos_degree())
    throw std::invalid_argument("truncate: N must exceed k + l");
  const int d = p.dim();
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n_sites) * d,
                          static_cast<Eigen::Index>(n_sites) * d);
  for (int i = 0; i < n_sites; ++i)
    for (int ip = 0; ip < n_sites; ++ip) {
      int j = i - ip;
      if (j >= -p.neg_degree() && j <= p.pos_degree())
        m.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(ip) * d, d, d) =
            p.coeff(j);
    }
  return {p, n_sites, std::move(m)};
}

int coker_dim_estimate(const ToeplitzTruncation& t, double rank_tol) {
  Eigen::BDCSVD<Matrix> svd(t.matrix);
  const auto& sv = svd.singularValues();
  const int n = static_cast<int>(sv.size());
  if (n == 0) return 0;
  double top = sv(0);
  if (top == 0.0) return n;
  int small = 0;
  while (small < n && sv(n - 1 - small) < rank_tol * top) ++small;
  if (small > 0 && small < n) {
    double largest_dropped = sv(n - small);
    double smallest_kept = sv(n - 1 - small);
    if (largest_dropped > 0.0 && smallest_kept / largest_dropped < 1e2)
      throw ResolutionError("coker_dim_estimate: no clear singular-value gap");
  }
  return small;
}

int toeplitz_index(const MatrixLaurentPoly& p) {
  return -winding_number(p, Contour::unit_circle());
}

CokerScan coker_scan(const MatrixLaurentPoly& p, double rank_tol) {
  CokerScan scan;
  scan.index = toeplitz_index(p);
  const int d = p.dim();
  int n = 8 * (p.neg_degree() + p.pos_degree() + 2);
  const int cap = 4096;
  if (static_cast<long>(n) * d > cap)
    throw std::invalid_argument("coker_scan: symbol bandwidth exceeds the size cap");
  int prev = -1;
  while (static_cast<long>(n) * d <= cap) {
    int dim = coker_dim_estimate(truncate(p, n), rank_tol);
    scan.n_sequence.push_back(n);
    scan.coker_dims.push_back(dim);
    if (prev == dim) {
      scan.stabilized = true;
      return scan;
    }
    prev = dim;
    n *= 2;
  }
  scan.stabilized = false;
  return scan;
}

}  // namespace bulkedge
