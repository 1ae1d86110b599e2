#include "bulkedge/indices.hpp"

#include <chrono>
#include <cmath>

#include "bulkedge/parallel.hpp"
#include "bulkedge/spectral.hpp"

namespace bulkedge {

namespace {

// Global orientation: fixed once so that the QWZ model with m = 1 has bulk
// index +1; never adjusted per model.
constexpr int kOrientationSign = 1;

}  // namespace

Matrix riesz_projector(const Matrix& M, const Contour& c, double boundary_tol) {
  if (M.rows() != M.cols()) throw std::invalid_argument("riesz_projector: matrix not square");
  if (boundary_tol <= 0.0) boundary_tol = kBoundaryTolRel * c.diameter();
  const int n = static_cast<int>(M.rows());

  Eigen::ComplexEigenSolver<Matrix> es(M, false);
  for (int i = 0; i < n; ++i)
    if (c.distance(es.eigenvalues()(i)) < boundary_tol)
      throw ValidationError("riesz_projector: spectrum touches contour");

  ResolvedProjector rp = resolve_projector(
      [&](int m) { return resolvent_contour_integral(M, c, m); }, c.quadrature_nodes());
  const Matrix& P = rp.projector;

  double scale = std::max(1.0, max_abs(P));
  if (max_abs(Matrix(P * P - P)) > 1e-8 * scale * scale)
    throw ResolutionError("riesz_projector: projector not idempotent at this resolution");
  cplx tr = P.trace();
  double nearest = std::round(tr.real());
  if (std::abs(tr - cplx(nearest, 0)) > 0.01)
    throw ResolutionError("riesz_projector: non-integral trace");
  return P;
}

ProjectorField bulk_field(const ModelSpec& spec, int n1, int n2) {
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("bulk_field: grid too small");
  ProjectorField field;
  field.n1 = n1;
  field.n2 = n2;
  field.ambient = spec.d;
  field.frames.assign(static_cast<size_t>(n1) * n2, Matrix());
  std::vector<int> ranks(static_cast<size_t>(n1) * n2, -1);

  parallel_for(n1, [&](int i) {
    double x = 2.0 * kPi * i / n1;
    MatrixLaurentPoly sym = symbol_at(spec, x);
    for (int j = 0; j < n2; ++j) {
      cplx z = std::exp(kImag * (2.0 * kPi * j / n2));
      Matrix h = eval(sym, z);
      ResolvedProjector rp = resolve_projector(
          [&](int m) { return resolvent_contour_integral(h, spec.gap, m); },
          spec.gap.quadrature_nodes());
      field.frames[static_cast<size_t>(i) * n2 + j] = std::move(rp.frame);
      ranks[static_cast<size_t>(i) * n2 + j] = rp.rank;
    }
  });

  for (size_t idx = 0; idx < ranks.size(); ++idx)
    if (ranks[idx] != ranks[0])
      throw ValidationError("bulk_field: rank jump across grid (gap violation)");
  field.rank = ranks[0];
  field.check_invariants();
  return field;
}

ProjectorField edge_field(const ModelSpec& spec, int n1, int n2, Linearization backend) {
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("edge_field: grid too small");
  PolyFamily family;
  family.n1 = n1;
  family.n2 = n2;
  family.polys.reserve(static_cast<size_t>(n1) * n2);
  const Matrix id = Matrix::Identity(spec.d, spec.d);
  for (int i = 0; i < n1; ++i) {
    double x = 2.0 * kPi * i / n1;
    MatrixLaurentPoly sym = symbol_at(spec, x);
    for (int j = 0; j < n2; ++j) {
      cplx lambda = spec.gap.point_arclength(static_cast<double>(j) / n2);
      MatrixLaurentPoly shifted = (sym - MatrixLaurentPoly::constant(lambda * id));
      // Clear the z^{-k} part without trimming so every fiber shares degree k+l.
      MatrixLaurentPoly cleared(spec.d, 0, spec.k + spec.l);
      for (int deg = -spec.k; deg <= spec.l; ++deg)
        cleared.set_coeff(deg + spec.k,
                          deg >= -shifted.neg_degree() && deg <= shifted.pos_degree()
                              ? shifted.coeff(deg)
                              : Matrix::Zero(spec.d, spec.d));
      family.polys.push_back(std::move(cleared));
    }
  }
  return bun_family(family, Contour::unit_circle(), kInvertibilityTol, backend);
}

int chern_number(const ProjectorField& field) {
  field.check_invariants();
  if (field.rank == 0) return 0;
  double total = 0.0;
  for (int i = 0; i < field.n1; ++i)
    for (int j = 0; j < field.n2; ++j) {
      const Matrix& f1 = field.frame(i, j);
      const Matrix& f2 = field.frame(i + 1, j);
      const Matrix& f3 = field.frame(i + 1, j + 1);
      const Matrix& f4 = field.frame(i, j + 1);
      cplx link = Matrix(f1.adjoint() * f2).determinant() *
                  Matrix(f2.adjoint() * f3).determinant() *
                  Matrix(f3.adjoint() * f4).determinant() *
                  Matrix(f4.adjoint() * f1).determinant();
      if (std::abs(link) < 1e-12)
        throw ResolutionError("chern_number: degenerate plaquette; refine grid");
      double phi = std::arg(link);
      if (std::abs(phi) >= kPi / 2)
        throw ResolutionError("chern_number: inadmissible plaquette; refine grid");
      total += phi;
    }
  double c = total / (2.0 * kPi);
  double nearest = std::round(c);
  if (std::abs(c - nearest) > kChernRoundingTol)
    throw ResolutionError("chern_number: plaquette sum too far from an integer");
  return static_cast<int>(nearest);
}

namespace {

template <class Compute>
RefinedIndex refine_index(int n1, int n2, int grid_cap, Compute&& compute) {
  RefinedIndex out;
  out.n1 = n1;
  out.n2 = n2;
  bool have_prev = false;
  int prev = 0;
  while (true) {
    bool ok = false;
    int value = 0;
    try {
      value = compute(out.n1, out.n2);
      ok = true;
    } catch (const ResolutionError&) {
      ok = false;  // refine and retry
    }
    if (ok) {
      if (have_prev && value == prev) {
        out.value = value;
        out.converged = true;
        return out;
      }
      have_prev = true;
      prev = value;
      out.value = value;
    }
    if (out.n1 * 2 > grid_cap || out.n2 * 2 > grid_cap) {
      if (!have_prev)
        throw ResolutionError("index refinement: no admissible grid below the cap");
      out.converged = false;
      return out;
    }
    out.n1 *= 2;
    out.n2 *= 2;
  }
}

}  // namespace

RefinedIndex refine_bulk_index(const ModelSpec& spec, int n1, int n2, int grid_cap) {
  return refine_index(n1, n2, grid_cap, [&](int a, int b) {
    return kOrientationSign * -chern_number(bulk_field(spec, a, b));
  });
}

RefinedIndex refine_edge_index(const ModelSpec& spec, int n1, int n2, int grid_cap,
                               Linearization backend) {
  return refine_index(n1, n2, grid_cap, [&](int a, int b) {
    return kOrientationSign * chern_number(edge_field(spec, a, b, backend));
  });
}

int bulk_index(const ModelSpec& spec, int n1, int n2, int grid_cap) {
  RefinedIndex r = refine_bulk_index(spec, n1, n2, grid_cap);
  if (!r.converged) throw ResolutionError("bulk_index: not stable under grid doubling");
  return r.value;
}

int edge_index(const ModelSpec& spec, int n1, int n2, int grid_cap) {
  RefinedIndex r = refine_edge_index(spec, n1, n2, grid_cap);
  if (!r.converged) throw ResolutionError("edge_index: not stable under grid doubling");
  return r.value;
}

namespace {

void check_path(const HermitianPath& path) {
  if (path.ts.size() < 2 || path.ts.size() != path.mats.size())
    throw std::invalid_argument("spectral_flow: need matching ts/mats with >= 2 samples");
  for (size_t i = 0; i + 1 < path.ts.size(); ++i)
    if (path.ts[i + 1] <= path.ts[i])
      throw std::invalid_argument("spectral_flow: ts must be strictly increasing");
  for (const Matrix& m : path.mats) {
    double scale = std::max(1.0, max_abs(m));
    if (max_abs(Matrix(m - m.adjoint())) > kFrameOrthoTol * scale)
      throw std::invalid_argument("spectral_flow: matrix not Hermitian");
  }
}

RealVector sorted_eigenvalues(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues();  // ascending
}

}  // namespace

int spectral_flow(const HermitianPath& path, double tol) {
  check_path(path);
  RealVector first = sorted_eigenvalues(path.mats.front());
  RealVector last = sorted_eigenvalues(path.mats.back());
  for (const RealVector* ev : {&first, &last})
    if (ev->cwiseAbs().minCoeff() <= tol)
      throw ValidationError("spectral_flow: endpoint has an eigenvalue at zero");
  // chi_[0, inf): zero counts as nonnegative.
  auto count_nonneg = [](const RealVector& ev) {
    int c = 0;
    for (int i = 0; i < ev.size(); ++i)
      if (ev(i) >= 0.0) ++c;
    return c;
  };
  return count_nonneg(last) - count_nonneg(first);
}

FlowTrace spectral_flow_trace(const HermitianPath& path) {
  check_path(path);
  FlowTrace trace;
  trace.ts = path.ts;
  for (const Matrix& m : path.mats) trace.eigenvalues.push_back(sorted_eigenvalues(m));
  const int d = static_cast<int>(trace.eigenvalues.front().size());
  trace.crossings.assign(d, {});
  for (int b = 0; b < d; ++b)
    for (size_t i = 0; i + 1 < trace.eigenvalues.size(); ++i) {
      double a = trace.eigenvalues[i](b);
      double c = trace.eigenvalues[i + 1](b);
      if (a < 0.0 && c >= 0.0) ++trace.crossings[b].up;
      if (a >= 0.0 && c < 0.0) ++trace.crossings[b].down;
    }
  return trace;
}

IndexReport verify_correspondence(const ModelSpec& spec, int n1, int n2, int grid_cap) {
  auto t0 = std::chrono::steady_clock::now();
  GapReport gap = gap_check(spec);
  if (!gap.ok)
    throw ValidationError("verify_correspondence: gap contour touches the spectrum");

  IndexReport rep;
  rep.gap_margin = gap.margin;
  RefinedIndex bulk = refine_bulk_index(spec, n1, n2, grid_cap);
  RefinedIndex edge = refine_edge_index(spec, n1, n2, grid_cap);
  rep.bulk = bulk.value;
  rep.edge = edge.value;
  rep.bulk_n1 = bulk.n1;
  rep.bulk_n2 = bulk.n2;
  rep.edge_n1 = edge.n1;
  rep.edge_n2 = edge.n2;
  rep.converged = bulk.converged && edge.converged;
  rep.equal = rep.converged && bulk.value == edge.value;
  rep.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace bulkedge
