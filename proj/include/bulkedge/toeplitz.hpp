#pragma once

#include "bulkedge/matpoly.hpp"

namespace bulkedge {

// Finite section of the half-line operator of a symbol: the N x N block
// Toeplitz matrix with block (i, i') = a_{i - i'}, site-major layout.
struct ToeplitzTruncation {
  MatrixLaurentPoly symbol;
  int sites = 0;
  Matrix matrix;
};

ToeplitzTruncation truncate(const MatrixLaurentPoly& p, int n_sites);

// Number of singular values below rank_tol times the largest one. Requires
// a factor >= 100 between the smallest kept and largest dropped singular
// value, else the estimate is inconclusive. For k = 0 symbols this
// stabilizes in N to the cokernel dimension of the half-line operator.
int coker_dim_estimate(const ToeplitzTruncation& t, double rank_tol = 1e-6);

// Minus the winding number of det p over the unit circle.
int toeplitz_index(const MatrixLaurentPoly& p);

struct CokerScan {
  std::vector<int> n_sequence;
  std::vector<int> coker_dims;
  int index = 0;
  bool stabilized = false;
};

// Doubles N from 8(k + l + 2) until two consecutive estimates agree,
// capped at N * d = 4096.
CokerScan coker_scan(const MatrixLaurentPoly& p, double rank_tol = 1e-6);

}  // namespace bulkedge
