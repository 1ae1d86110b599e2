#include "bulkedge/models.hpp"

#include <algorithm>
#include <cmath>

#include "bulkedge/parallel.hpp"

namespace bulkedge {

MatrixLaurentPoly symbol_at(const ModelSpec& spec, double x) {
  MatrixLaurentPoly p(spec.d, spec.k, spec.l);
  for (const FourierTerm& t : spec.fourier) {
    if (t.j < -spec.k || t.j > spec.l)
      throw std::invalid_argument("symbol_at: Fourier term outside declared degree range");
    if (t.c.rows() != spec.d || t.c.cols() != spec.d)
      throw std::invalid_argument("symbol_at: Fourier coefficient has wrong dimension");
    p.set_coeff(t.j, p.coeff(t.j) + t.c * std::exp(kImag * (static_cast<double>(t.m) * x)));
  }
  return p;
}

GapReport gap_check(const ModelSpec& spec, int n1, int n2, double margin) {
  GapReport rep;
  rep.margin = std::numeric_limits<double>::max();
  auto lambdas = spec.gap.quadrature();
  std::vector<GapReport> per_row(n1);
  parallel_for(n1, [&](int i) {
    double x = 2.0 * kPi * i / n1;
    MatrixLaurentPoly sym = symbol_at(spec, x);
    GapReport local;
    local.margin = std::numeric_limits<double>::max();
    for (int jz = 0; jz < n2; ++jz) {
      cplx z = std::exp(kImag * (2.0 * kPi * jz / n2));
      Matrix h = eval(sym, z);
      for (const auto& node : lambdas) {
        double s = smallest_singular_value(h - node.z * Matrix::Identity(spec.d, spec.d));
        if (s < local.margin) {
          local.margin = s;
          local.x_at = x;
          local.z_at = z;
          local.lambda_at = node.z;
        }
      }
    }
    per_row[i] = local;
  });
  for (const auto& local : per_row)
    if (local.margin < rep.margin) {
      rep.margin = local.margin;
      rep.x_at = local.x_at;
      rep.z_at = local.z_at;
      rep.lambda_at = local.lambda_at;
    }
  rep.ok = rep.margin > margin;
  return rep;
}

namespace {

double param(const std::map<std::string, double>& params, const std::string& key,
             double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

// Gap circle around the lowest band of a Hermitian model: scans the band
// edges on a fixed 64x64 grid and clears a quarter of the gap above.
Contour lowest_band_circle(const ModelSpec& spec) {
  const int scan = 64;
  double lo_min = std::numeric_limits<double>::max();
  double lo_max = -std::numeric_limits<double>::max();
  double next_min = std::numeric_limits<double>::max();
  for (int i = 0; i < scan; ++i) {
    MatrixLaurentPoly sym = symbol_at(spec, 2.0 * kPi * i / scan);
    for (int j = 0; j < scan; ++j) {
      Matrix h = eval(sym, std::exp(kImag * (2.0 * kPi * j / scan)));
      Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
      const auto& ev = es.eigenvalues();
      lo_min = std::min(lo_min, ev(0));
      lo_max = std::max(lo_max, ev(0));
      if (ev.size() > 1) next_min = std::min(next_min, ev(1));
    }
  }
  double gap_above = std::max(0.0, next_min - lo_max);
  double half = 0.5 * (lo_max - lo_min);
  double center = 0.5 * (lo_max + lo_min);
  return Contour::circle(cplx(center, 0), half + gap_above / 4.0);
}

ModelSpec scalar_shift(double a) {
  ModelSpec spec;
  spec.name = "scalar_shift";
  spec.d = 1;
  spec.k = 0;
  spec.l = 1;
  Matrix one = Matrix::Identity(1, 1);
  spec.fourier.push_back({1, 0, one});
  spec.fourier.push_back({0, 1, a * one});
  spec.gap = Contour::circle(cplx(0, 0), 0.5);
  return spec;
}

ModelSpec ssh(double t) {
  ModelSpec spec;
  spec.name = "ssh";
  spec.d = 2;
  spec.k = 1;
  spec.l = 1;
  Matrix a0(2, 2), a1(2, 2), am1(2, 2);
  a0 << 0, t, t, 0;
  a1 << 0, 1, 0, 0;
  am1 << 0, 0, 1, 0;
  spec.fourier.push_back({0, 0, a0});
  spec.fourier.push_back({1, 0, a1});
  spec.fourier.push_back({-1, 0, am1});
  spec.gap = lowest_band_circle(spec);
  return spec;
}

ModelSpec qwz(double m) {
  ModelSpec spec;
  spec.name = "qwz";
  spec.d = 2;
  spec.k = 1;
  spec.l = 1;
  const Matrix sx = pauli_x(), sy = pauli_y(), sz = pauli_z();
  const cplx half_i = cplx(0, -0.5);  // 1 / (2i)
  // sin(x) sx + sin(th) sy + (m + cos(x) + cos(th)) sz with z = e^{i th}.
  spec.fourier.push_back({0, 0, m * sz});
  spec.fourier.push_back({0, 1, half_i * sx + 0.5 * sz});
  spec.fourier.push_back({0, -1, -half_i * sx + 0.5 * sz});
  spec.fourier.push_back({1, 0, half_i * sy + 0.5 * sz});
  spec.fourier.push_back({-1, 0, -half_i * sy + 0.5 * sz});
  spec.gap = lowest_band_circle(spec);
  return spec;
}

ModelSpec hofstadter(int p, int q) {
  if (q < 2) throw std::invalid_argument("hofstadter: q must be at least 2");
  ModelSpec spec;
  spec.name = "hofstadter";
  spec.d = q;
  spec.k = 1;
  spec.l = 1;
  Matrix hop = Matrix::Zero(q, q);
  for (int j = 0; j + 1 < q; ++j) {
    hop(j + 1, j) = 1;
    hop(j, j + 1) = 1;
  }
  Matrix diag_plus = Matrix::Zero(q, q), diag_minus = Matrix::Zero(q, q);
  for (int j = 0; j < q; ++j) {
    cplx phase = std::exp(kImag * (2.0 * kPi * p * j / q));
    diag_plus(j, j) = phase;
    diag_minus(j, j) = std::conj(phase);
  }
  Matrix fwd = Matrix::Zero(q, q), bwd = Matrix::Zero(q, q);
  fwd(0, q - 1) = 1;
  bwd(q - 1, 0) = 1;
  spec.fourier.push_back({0, 0, hop});
  spec.fourier.push_back({0, 1, diag_plus});
  spec.fourier.push_back({0, -1, diag_minus});
  spec.fourier.push_back({1, 0, fwd});
  spec.fourier.push_back({-1, 0, bwd});
  spec.gap = lowest_band_circle(spec);
  return spec;
}

ModelSpec hatano_nelson_x(double a) {
  ModelSpec spec;
  spec.name = "hatano_nelson_x";
  spec.d = 1;
  spec.k = 1;
  spec.l = 1;
  Matrix one = Matrix::Identity(1, 1);
  spec.fourier.push_back({1, 0, one});
  spec.fourier.push_back({-1, 1, a * one});
  spec.gap = Contour::circle(cplx(0, 0), 0.05);
  return spec;
}

}  // namespace

ModelSpec builtin_model(const std::string& name, const std::map<std::string, double>& params) {
  if (name == "scalar_shift") return scalar_shift(param(params, "a", 2.0));
  if (name == "ssh") return ssh(param(params, "t", 0.5));
  if (name == "qwz") return qwz(param(params, "m", 1.0));
  if (name == "hofstadter")
    return hofstadter(static_cast<int>(param(params, "p", 1.0)),
                      static_cast<int>(param(params, "q", 3.0)));
  if (name == "hatano_nelson_x") return hatano_nelson_x(param(params, "a", 0.25));
  throw std::invalid_argument("unknown builtin model: " + name);
}

std::vector<std::string> builtin_names() {
  return {"scalar_shift", "ssh", "qwz", "hofstadter", "hatano_nelson_x"};
}

}  // namespace bulkedge
