#include "bulkedge/confmap.hpp"

#include <atomic>

#include "bulkedge/parallel.hpp"
#include "bulkedge/spectral.hpp"

namespace bulkedge {

namespace {

bool leading_invertible(const MatrixLaurentPoly& p, double tol) {
  const Matrix& al = p.coeff(p.pos_degree());
  return smallest_singular_value(al) > tol * std::max(max_abs(al), p.max_coeff_norm() * 1e-8);
}

Configuration empty_configuration(int d, Region region) {
  Configuration out;
  out.A = Matrix::Zero(0, 0);
  out.iota = Matrix::Zero(0, d);
  out.region = std::move(region);
  return out;
}

std::vector<cplx> chart_candidates_clearing(const Contour& c) {
  double r = 3.0;
  if (c.kind() == Contour::Kind::Circle)
    r = std::max(3.0, std::abs(c.circle_center()) + 3.0 * c.circle_radius());
  std::vector<cplx> out;
  for (int i = 0; i < 16; ++i)
    out.push_back(r * std::exp(kImag * (2.0 * kPi * i / 16.0)));
  return out;
}

}  // namespace

Configuration conf_plane(const MatrixLaurentPoly& p, double tol, bool allow_chart) {
  if (p.neg_degree() != 0)
    throw std::invalid_argument("conf_plane: polynomial must have k = 0");
  const MatrixLaurentPoly pt = p.trimmed();
  const int d = pt.dim();
  if (pt.pos_degree() == 0) return empty_configuration(d, Region::full_plane());

  if (leading_invertible(pt, tol)) {
    CompanionPair cp = companion(pt, tol);
    return {std::move(cp.A), std::move(cp.iota), Region::full_plane()};
  }
  if (!allow_chart)
    throw ValidationError("conf_plane: singular leading coefficient; use chart_select");

  ChartSelection ch = chart_select(pt);
  CompanionPair cp = companion(ch.transformed, tol);
  Eigen::ComplexEigenSolver<Matrix> es(cp.A, false);
  double scale = std::max(1.0, max_abs(cp.A));
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()(i)) < 1e-9 * scale)
      throw ValidationError("conf_plane: polynomial degenerates at infinity; use conf_region");
  Configuration chart_cfg{std::move(cp.A), std::move(cp.iota), std::nullopt};
  Configuration out = mobius_apply(chart_cfg, ch.mobius.inverse());
  out.region = Region::full_plane();
  return out;
}

Configuration conf_region(const MatrixLaurentPoly& p, const Contour& c, double tol) {
  if (p.neg_degree() != 0)
    throw std::invalid_argument("conf_region: polynomial must have k = 0");
  const MatrixLaurentPoly pt = p.trimmed();
  const int d = pt.dim();
  const int w = winding_number(pt, c);

  Configuration restricted;
  if (pt.pos_degree() == 0) {
    restricted = empty_configuration(d, Region::interior_of(c));
  } else if (leading_invertible(pt, tol)) {
    restricted = restrict(conf_plane(pt, tol, false), c);
  } else {
    if (c.kind() != Contour::Kind::Circle)
      throw std::invalid_argument(
          "conf_region: singular leading coefficient needs a circle contour for the chart route");
    ChartSelection ch = chart_select(pt, chart_candidates_clearing(c));
    CompanionPair cp = companion(ch.transformed, tol);
    Configuration chart_cfg{std::move(cp.A), std::move(cp.iota), std::nullopt};
    Contour image = mobius_circle_image(ch.mobius, c);
    Configuration on_chart = restrict(chart_cfg, image);
    restricted = mobius_apply(on_chart, ch.mobius.inverse());
    restricted.region = Region::interior_of(c);
  }

  if (restricted.rank() != w)
    throw ResolutionError("conf_region: restricted rank disagrees with winding number");
  restricted.region = Region::interior_of(c);
  return restricted;
}

void companion_pencil(const MatrixLaurentPoly& p, Matrix* A, Matrix* B) {
  if (p.neg_degree() != 0)
    throw std::invalid_argument("companion_pencil: polynomial must have k = 0");
  const int d = p.dim();
  const int l = p.pos_degree();
  const int n = d * l;
  *A = Matrix::Zero(n, n);
  *B = Matrix::Identity(n, n);
  if (l == 0) return;
  for (int i = 0; i + 1 < l; ++i)
    A->block(i * d, (i + 1) * d, d, d) = Matrix::Identity(d, d);
  for (int j = 0; j < l; ++j)
    A->block((l - 1) * d, j * d, d, d) = -p.coeff(j);
  B->block((l - 1) * d, (l - 1) * d, d, d) = p.coeff(l);
}

ProjectorField bun_family(const PolyFamily& family, const Contour& c, double tol,
                          Linearization backend) {
  if (family.n1 < 2 || family.n2 < 2 ||
      family.polys.size() != static_cast<size_t>(family.n1) * family.n2)
    throw std::invalid_argument("bun_family: malformed family grid");
  const int d = family.polys[0].dim();
  const int l = family.polys[0].pos_degree();
  for (const auto& p : family.polys)
    if (p.dim() != d || p.pos_degree() != l || p.neg_degree() != 0)
      throw std::invalid_argument("bun_family: grid polynomials must share (d, l) with k = 0");

  const int n = family.n1 * family.n2;
  const int ambient = d * l;
  ProjectorField field;
  field.n1 = family.n1;
  field.n2 = family.n2;
  field.ambient = ambient;
  field.frames.assign(n, Matrix());
  std::vector<int> ranks(n, -1);

  if (backend == Linearization::CompanionPencil) {
    parallel_for(n, [&](int idx) {
      Matrix A, B;
      companion_pencil(family.polys[idx], &A, &B);
      ResolvedProjector rp = resolve_projector(
          [&](int m) { return pencil_contour_integral(A, B, c, m); }, c.quadrature_nodes());
      field.frames[idx] = std::move(rp.frame);
      ranks[idx] = rp.rank;
    });
  } else {
    // One shared chart point for the whole family keeps the fibers in a
    // single coherent ambient space.
    std::vector<cplx> cands = chart_candidates_clearing(c);
    double best_margin = -1.0;
    cplx best_q = 0;
    for (cplx q : cands) {
      if (std::abs(q) <= 1.0 + 1e-9) continue;
      double margin = std::numeric_limits<double>::max();
      for (const auto& p : family.polys)
        margin = std::min(margin, smallest_singular_value(eval(p, q)));
      if (margin > best_margin) {
        best_margin = margin;
        best_q = q;
      }
    }
    if (best_margin <= tol)
      throw ValidationError("bun_family: no usable shared chart");
    if (c.kind() != Contour::Kind::Circle)
      throw std::invalid_argument("bun_family: chart backend requires a circle contour");
    MobiusTransform mu = MobiusTransform::reciprocal_at(best_q);
    Contour image = mobius_circle_image(mu, c);

    parallel_for(n, [&](int idx) {
      ChartSelection ch = chart_select(family.polys[idx], {best_q}, tol);
      CompanionPair cp = companion(ch.transformed, tol);
      ResolvedProjector rp = resolve_projector(
          [&](int m) { return resolvent_contour_integral(cp.A, image, m); },
          image.quadrature_nodes());
      field.frames[idx] = std::move(rp.frame);
      ranks[idx] = rp.rank;
    });
  }

  for (int idx = 0; idx < n; ++idx)
    if (ranks[idx] != ranks[0])
      throw ValidationError("bun_family: r not constant: refine model or contour");
  field.rank = ranks[0];

  // Argument-principle cross-check at one node.
  if (winding_number(family.polys[0], c) != field.rank)
    throw ResolutionError("bun_family: rank disagrees with winding number");

  field.check_invariants();
  return field;
}

}  // namespace bulkedge
