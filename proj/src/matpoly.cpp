#include "bulkedge/matpoly.hpp"

#include <algorithm>
#include <cmath>

namespace bulkedge {

MatrixLaurentPoly::MatrixLaurentPoly(int d, int k, int l) : d_(d), k_(k), l_(l) {
  if (d < 1) throw std::invalid_argument("matpoly: dimension must be positive");
  if (k < 0 || l < 0) throw std::invalid_argument("matpoly: degrees must be nonnegative");
  coeffs_.assign(k + l + 1, Matrix::Zero(d, d));
}

MatrixLaurentPoly MatrixLaurentPoly::constant(const Matrix& a0) {
  if (a0.rows() != a0.cols()) throw std::invalid_argument("matpoly: coefficient not square");
  MatrixLaurentPoly p(static_cast<int>(a0.rows()), 0, 0);
  p.set_coeff(0, a0);
  return p;
}

MatrixLaurentPoly MatrixLaurentPoly::scalar(std::vector<std::pair<int, cplx>> terms) {
  int k = 0, l = 0;
  for (auto& [j, c] : terms) {
    k = std::max(k, -j);
    l = std::max(l, j);
  }
  MatrixLaurentPoly p(1, k, l);
  for (auto& [j, c] : terms) {
    Matrix m = p.coeff(j);
    m(0, 0) += c;
    p.set_coeff(j, m);
  }
  return p;
}

const Matrix& MatrixLaurentPoly::coeff(int j) const {
  if (j < -k_ || j > l_) throw std::out_of_range("matpoly: coefficient index out of range");
  return coeffs_[j + k_];
}

void MatrixLaurentPoly::set_coeff(int j, const Matrix& a) {
  if (j < -k_ || j > l_) throw std::out_of_range("matpoly: coefficient index out of range");
  if (a.rows() != d_ || a.cols() != d_)
    throw std::invalid_argument("matpoly: coefficient has wrong dimension");
  if (!a.allFinite()) throw std::invalid_argument("matpoly: coefficient not finite");
  coeffs_[j + k_] = a;
}

double MatrixLaurentPoly::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, max_abs(c));
  return m;
}

MatrixLaurentPoly MatrixLaurentPoly::trimmed(double tol) const {
  double floor = tol * max_coeff_norm();
  int k = k_, l = l_;
  while (k > 0 && max_abs(coeff(-k)) <= floor) --k;
  while (l > 0 && max_abs(coeff(l)) <= floor) --l;
  MatrixLaurentPoly out(d_, k, l);
  for (int j = -k; j <= l; ++j) out.set_coeff(j, coeff(j));
  return out;
}

MatrixLaurentPoly MatrixLaurentPoly::shifted(int power) const {
  int k = std::max(0, k_ - power);
  int l = std::max(0, l_ + power);
  MatrixLaurentPoly out(d_, k, l);
  for (int j = -k_; j <= l_; ++j) out.set_coeff(j + power, coeff(j));
  return out.trimmed();
}

MatrixLaurentPoly MatrixLaurentPoly::operator+(const MatrixLaurentPoly& rhs) const {
  if (d_ != rhs.d_) throw std::invalid_argument("matpoly: dimension mismatch");
  MatrixLaurentPoly out(d_, std::max(k_, rhs.k_), std::max(l_, rhs.l_));
  for (int j = -out.k_; j <= out.l_; ++j) {
    Matrix a = Matrix::Zero(d_, d_);
    if (j >= -k_ && j <= l_) a += coeff(j);
    if (j >= -rhs.k_ && j <= rhs.l_) a += rhs.coeff(j);
    out.set_coeff(j, a);
  }
  return out;
}

MatrixLaurentPoly MatrixLaurentPoly::operator-(const MatrixLaurentPoly& rhs) const {
  return *this + rhs.scaled(cplx(-1, 0));
}

MatrixLaurentPoly MatrixLaurentPoly::operator*(const MatrixLaurentPoly& rhs) const {
  if (d_ != rhs.d_) throw std::invalid_argument("matpoly: dimension mismatch");
  MatrixLaurentPoly out(d_, k_ + rhs.k_, l_ + rhs.l_);
  for (int j1 = -k_; j1 <= l_; ++j1)
    for (int j2 = -rhs.k_; j2 <= rhs.l_; ++j2)
      out.set_coeff(j1 + j2, out.coeff(j1 + j2) + coeff(j1) * rhs.coeff(j2));
  return out;
}

MatrixLaurentPoly MatrixLaurentPoly::scaled(cplx s) const {
  MatrixLaurentPoly out(d_, k_, l_);
  for (int j = -k_; j <= l_; ++j) out.set_coeff(j, s * coeff(j));
  return out;
}

MatrixLaurentPoly direct_sum(const MatrixLaurentPoly& a, const MatrixLaurentPoly& b) {
  int d = a.dim() + b.dim();
  MatrixLaurentPoly out(d, std::max(a.neg_degree(), b.neg_degree()),
                        std::max(a.pos_degree(), b.pos_degree()));
  for (int j = -out.neg_degree(); j <= out.pos_degree(); ++j) {
    Matrix m = Matrix::Zero(d, d);
    if (j >= -a.neg_degree() && j <= a.pos_degree())
      m.topLeftCorner(a.dim(), a.dim()) = a.coeff(j);
    if (j >= -b.neg_degree() && j <= b.pos_degree())
      m.bottomRightCorner(b.dim(), b.dim()) = b.coeff(j);
    out.set_coeff(j, m);
  }
  return out;
}

MatrixLaurentPoly kronecker(const Matrix& g, const MatrixLaurentPoly& p) {
  if (g.rows() != g.cols()) throw std::invalid_argument("matpoly: kronecker factor not square");
  int gd = static_cast<int>(g.rows());
  MatrixLaurentPoly out(gd * p.dim(), p.neg_degree(), p.pos_degree());
  for (int j = -p.neg_degree(); j <= p.pos_degree(); ++j) {
    Matrix m(gd * p.dim(), gd * p.dim());
    for (int r = 0; r < gd; ++r)
      for (int c = 0; c < gd; ++c)
        m.block(r * p.dim(), c * p.dim(), p.dim(), p.dim()) = g(r, c) * p.coeff(j);
    out.set_coeff(j, m);
  }
  return out;
}

Matrix eval(const MatrixLaurentPoly& p, cplx z) {
  if (p.neg_degree() > 0 && z == cplx(0, 0))
    throw std::domain_error("matpoly: evaluation at z = 0 with negative degrees");
  Matrix out = Matrix::Zero(p.dim(), p.dim());
  for (int j = -p.neg_degree(); j <= p.pos_degree(); ++j)
    out += p.coeff(j) * std::pow(z, j);
  return out;
}

int winding_number(const MatrixLaurentPoly& p, const Contour& c, int n_samples) {
  int n = std::max(n_samples, 16);
  const int cap = 1 << 20;
  while (true) {
    std::vector<cplx> dets(n);
    double dmax = 0.0, dmin = std::numeric_limits<double>::max();
    for (int i = 0; i < n; ++i) {
      dets[i] = eval(p, c.point(static_cast<double>(i) / n)).determinant();
      dmax = std::max(dmax, std::abs(dets[i]));
      dmin = std::min(dmin, std::abs(dets[i]));
    }
    if (dmax == 0.0 || dmin <= 1e-12 * dmax)
      throw ValidationError("winding_number: symbol not invertible on contour");
    double total = 0.0;
    bool resolved = true;
    for (int i = 0; i < n; ++i) {
      double step = std::arg(dets[(i + 1) % n] / dets[i]);
      if (std::abs(step) >= kPi / 2) {
        resolved = false;
        break;
      }
      total += step;
    }
    if (resolved) {
      double w = total / (2.0 * kPi);
      return static_cast<int>(std::lround(w));
    }
    if (n >= cap) throw ResolutionError("winding_number: insufficient resolution");
    n *= 2;
  }
}

FejerResult fejer_approx(const std::vector<std::pair<cplx, Matrix>>& samples, int degree) {
  if (degree < 0) throw std::invalid_argument("fejer_approx: degree must be nonnegative");
  const int m = static_cast<int>(samples.size());
  if (m < std::max(4 * degree, 1))
    throw std::invalid_argument("fejer_approx: need at least 4n samples");
  const int d = static_cast<int>(samples[0].second.rows());
  const cplx z0 = samples[0].first;
  const cplx omega = std::exp(kImag * (2.0 * kPi / m));
  for (int i = 0; i < m; ++i) {
    cplx expect = z0 * std::pow(omega, i);
    if (std::abs(samples[i].first - expect) > 1e-9 ||
        std::abs(std::abs(samples[i].first) - 1.0) > 1e-9)
      throw std::invalid_argument("fejer_approx: samples not uniformly spaced on the unit circle");
    if (samples[i].second.rows() != d || samples[i].second.cols() != d)
      throw std::invalid_argument("fejer_approx: inconsistent sample dimensions");
  }

  MatrixLaurentPoly out(d, degree, degree);
  for (int j = -degree; j <= degree; ++j) {
    Matrix cj = Matrix::Zero(d, d);
    for (int i = 0; i < m; ++i)
      cj += samples[i].second * std::pow(samples[i].first, -j);
    cj /= static_cast<double>(m);
    double w = 1.0 - std::abs(j) / (degree + 1.0);
    out.set_coeff(j, w * cj);
  }
  MatrixLaurentPoly poly = out.trimmed();

  double err = 0.0;
  for (const auto& [z, f] : samples) {
    Matrix diff = eval(poly, z) - f;
    Eigen::JacobiSVD<Matrix> svd(diff);
    err = std::max(err, svd.singularValues()(0));
  }
  return {poly, err};
}

CompanionPair companion(const MatrixLaurentPoly& p, double tol) {
  if (p.neg_degree() != 0)
    throw std::invalid_argument("companion: polynomial must have k = 0");
  const int d = p.dim();
  const int l = p.pos_degree();
  if (l == 0) return {Matrix::Zero(0, 0), Matrix::Zero(0, d)};

  const Matrix& al = p.coeff(l);
  double floor = tol * std::max(max_abs(al), p.max_coeff_norm() * 1e-8);
  if (smallest_singular_value(al) <= floor)
    throw ValidationError("companion: singular leading coefficient; use chart_select");

  Matrix al_inv = al.partialPivLu().solve(Matrix::Identity(d, d));
  const int n = d * l;
  Matrix A = Matrix::Zero(n, n);
  for (int i = 0; i + 1 < l; ++i)
    A.block(i * d, (i + 1) * d, d, d) = Matrix::Identity(d, d);
  for (int j = 0; j < l; ++j)
    A.block((l - 1) * d, j * d, d, d) = -al_inv * p.coeff(j);
  Matrix iota = Matrix::Zero(n, d);
  iota.block((l - 1) * d, 0, d, d) = al_inv;
  return {A, iota};
}

}  // namespace bulkedge
