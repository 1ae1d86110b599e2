#pragma once

#include <utility>
#include <vector>

#include "bulkedge/contour.hpp"
#include "bulkedge/types.hpp"

namespace bulkedge {

// A finite Laurent polynomial sum_{j=-k}^{l} a_j z^j with complex d x d
// matrix coefficients. Immutable after construction apart from coefficient
// assignment during building; all operations on it are pure.
class MatrixLaurentPoly {
 public:
  MatrixLaurentPoly(int d, int k, int l);

  static MatrixLaurentPoly constant(const Matrix& a0);
  static MatrixLaurentPoly scalar(std::vector<std::pair<int, cplx>> terms);

  int dim() const { return d_; }
  int neg_degree() const { return k_; }
  int pos_degree() const { return l_; }

  const Matrix& coeff(int j) const;
  void set_coeff(int j, const Matrix& a);

  // Drops numerically zero extreme coefficients so (k, l) stays tight.
  MatrixLaurentPoly trimmed(double tol = kTrimTol) const;

  // Multiplication by z^power (power may be negative).
  MatrixLaurentPoly shifted(int power) const;

  MatrixLaurentPoly operator+(const MatrixLaurentPoly& rhs) const;
  MatrixLaurentPoly operator-(const MatrixLaurentPoly& rhs) const;
  MatrixLaurentPoly operator*(const MatrixLaurentPoly& rhs) const;  // convolution
  MatrixLaurentPoly scaled(cplx s) const;

  double max_coeff_norm() const;

 private:
  int d_, k_, l_;
  std::vector<Matrix> coeffs_;  // index j + k_
};

// Block-diagonal direct sum of two symbols.
MatrixLaurentPoly direct_sum(const MatrixLaurentPoly& a, const MatrixLaurentPoly& b);

// Kronecker product g (x) p with a constant matrix g.
MatrixLaurentPoly kronecker(const Matrix& g, const MatrixLaurentPoly& p);

// Pointwise evaluation sum_j a_j z^j, summed in ascending degree order.
Matrix eval(const MatrixLaurentPoly& p, cplx z);

// Total phase change of det p along the contour divided by 2*pi, by sampled
// argument tracking with adaptive doubling (cap 2^20 samples).
int winding_number(const MatrixLaurentPoly& p, const Contour& c, int n_samples = 256);

struct FejerResult {
  MatrixLaurentPoly poly;
  double sup_error;  // operator-norm error over the sample set
};

// Cesaro-mean degree-n approximant from uniformly spaced unit-circle samples:
// sum_{|j|<=n} (1 - |j|/(n+1)) c_j z^j with c_j the discrete Fourier
// coefficients of the samples.
FejerResult fejer_approx(const std::vector<std::pair<cplx, Matrix>>& samples, int degree);

struct CompanionPair {
  Matrix A;     // (d*l) x (d*l)
  Matrix iota;  // (d*l) x d
};

// Block companion linearization of a degree-l polynomial (k = 0) with
// invertible leading coefficient: A carries identities on the superdiagonal
// and -a_l^{-1} a_j across the last block row; iota places a_l^{-1} in the
// generator block. Eigenvalues of A are the roots of det p with multiplicity,
// and sum_j A^j iota a_j = 0.
CompanionPair companion(const MatrixLaurentPoly& p, double tol = kInvertibilityTol);

}  // namespace bulkedge
