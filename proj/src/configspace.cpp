#include "bulkedge/configspace.hpp"

#include <cmath>
#include <limits>

#include "bulkedge/spectral.hpp"

namespace bulkedge {

bool Region::contains(cplx z) const {
  switch (kind_) {
    case Kind::OpenUnitDisk:
      return std::abs(z) < 1.0;
    case Kind::FullPlane:
      return true;
    case Kind::InteriorOf:
      return contour_->contains(z);
    case Kind::ExteriorOf:
      return !contour_->contains(z) && contour_->distance(z) > 0.0;
  }
  return false;
}

double Region::signed_distance(cplx z) const {
  switch (kind_) {
    case Kind::OpenUnitDisk:
      return 1.0 - std::abs(z);
    case Kind::FullPlane:
      return std::numeric_limits<double>::max();
    case Kind::InteriorOf:
      return contour_->signed_distance(z);
    case Kind::ExteriorOf:
      return -contour_->signed_distance(z);
  }
  return 0.0;
}

Matrix controllability_matrix(const Configuration& cfg) {
  const int r = cfg.rank();
  const int d = cfg.dim_v();
  Matrix K(r, r * d);
  Matrix block = cfg.iota;
  for (int i = 0; i < r; ++i) {
    K.block(0, i * d, r, d) = block;
    if (i + 1 < r) block = cfg.A * block;
  }
  return K;
}

ValidationReport validate(const Configuration& cfg, double tol) {
  ValidationReport rep;
  const int r = cfg.rank();
  if (r == 0) {
    rep.controllability_margin = std::numeric_limits<double>::max();
    rep.spectral_margin = std::numeric_limits<double>::max();
    rep.ok = true;
    return rep;
  }
  if (cfg.A.cols() != r || cfg.iota.rows() != r)
    throw std::invalid_argument("validate: inconsistent configuration shapes");

  Eigen::BDCSVD<Matrix> svd(controllability_matrix(cfg));
  rep.controllability_margin = svd.singularValues()(r - 1);

  if (cfg.region) {
    Eigen::ComplexEigenSolver<Matrix> es(cfg.A, false);
    double margin = std::numeric_limits<double>::max();
    for (int i = 0; i < r; ++i)
      margin = std::min(margin, cfg.region->signed_distance(es.eigenvalues()(i)));
    rep.spectral_margin = margin;
  } else {
    rep.spectral_margin = std::numeric_limits<double>::max();
  }
  rep.ok = rep.controllability_margin > tol && rep.spectral_margin > tol;
  return rep;
}

std::optional<Matrix> gl_equivalence(const Configuration& c1, const Configuration& c2,
                                     double tol) {
  if (c1.rank() != c2.rank())
    throw std::invalid_argument("gl_equivalence: rank mismatch");
  if (c1.dim_v() != c2.dim_v())
    throw std::invalid_argument("gl_equivalence: label space mismatch");
  const int r = c1.rank();
  if (r == 0) return Matrix::Zero(0, 0);

  Matrix K1 = controllability_matrix(c1);
  Matrix K2 = controllability_matrix(c2);
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(K1);
  Matrix g = K2 * cod.pseudoInverse();

  double na = std::max({max_abs(c1.A), max_abs(c2.A), 1e-300});
  double ni = std::max({max_abs(c1.iota), max_abs(c2.iota), 1e-300});
  double ng = std::max(max_abs(g), 1e-300);
  double res_a = max_abs(g * c1.A - c2.A * g) / (na * std::max(ng, 1.0));
  double res_i = max_abs(g * c1.iota - c2.iota) / (ni * std::max(ng, 1.0));
  if (std::max(res_a, res_i) > tol) return std::nullopt;
  if (smallest_singular_value(g) <= 1e-12 * max_abs(g)) return std::nullopt;
  return g;
}

namespace {

bool is_affine(const MobiusTransform& m) {
  double scale = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
  return std::abs(m.c) <= 1e-14 * scale;
}

std::optional<Contour> affine_contour_image(const MobiusTransform& m, const Contour& c) {
  cplx s = m.a / m.d;
  cplx t = m.b / m.d;
  switch (c.kind()) {
    case Contour::Kind::Circle:
      return Contour::circle(s * c.circle_center() + t, std::abs(s) * c.circle_radius(),
                             c.quadrature_nodes());
    case Contour::Kind::Ellipse:
      return Contour::ellipse(s * c.ellipse_center() + t, std::abs(s) * c.ellipse_semi_x(),
                              std::abs(s) * c.ellipse_semi_y(),
                              c.ellipse_rotation() + std::arg(s), c.quadrature_nodes());
    case Contour::Kind::Polyline: {
      std::vector<cplx> verts;
      for (cplx v : c.polyline_vertices()) verts.push_back(s * v + t);
      return Contour::polyline(std::move(verts), c.quadrature_nodes());
    }
  }
  return std::nullopt;
}

std::optional<Region> transform_region(const std::optional<Region>& reg,
                                       const MobiusTransform& m) {
  if (!reg) return std::nullopt;
  const bool affine = is_affine(m);
  if (reg->kind() == Region::Kind::FullPlane)
    return affine ? std::optional<Region>(Region::full_plane()) : std::nullopt;

  Contour src = reg->kind() == Region::Kind::OpenUnitDisk ? Contour::unit_circle()
                                                          : *reg->contour();
  bool interior = reg->kind() != Region::Kind::ExteriorOf;

  if (affine) {
    auto img = affine_contour_image(m, src);
    if (!img) return std::nullopt;
    return interior ? Region::interior_of(*img) : Region::exterior_of(*img);
  }
  if (src.kind() != Contour::Kind::Circle) return std::nullopt;

  cplx pole = -m.d / m.c;
  if (src.distance(pole) < 1e-10 * src.diameter()) return std::nullopt;
  Contour img = mobius_circle_image(m, src);

  // Classify the image side with a sample point away from the pole.
  cplx center = src.circle_center();
  double radius = src.circle_radius();
  cplx sample;
  if (interior) {
    sample = center;
    for (cplx cand : {center, center + cplx(radius / 2, 0), center + cplx(0, radius / 2),
                      center - cplx(radius / 2, 0)})
      if (std::abs(cand - pole) > 1e-3 * radius) {
        sample = cand;
        break;
      }
  } else {
    sample = center + cplx(2 * radius, 0);
    for (cplx cand : {center + cplx(2 * radius, 0), center - cplx(2 * radius, 0),
                      center + cplx(0, 2 * radius)})
      if (std::abs(cand - pole) > 1e-3 * radius) {
        sample = cand;
        break;
      }
  }
  return img.contains(m.apply(sample)) ? Region::interior_of(img) : Region::exterior_of(img);
}

}  // namespace

Configuration mobius_apply(const Configuration& cfg, const MobiusTransform& m, double tol) {
  if (!m.valid()) throw std::invalid_argument("mobius_apply: degenerate transform");
  const int r = cfg.rank();
  Matrix denom = m.c * cfg.A + m.d * Matrix::Identity(r, r);
  double scale = std::max(max_abs(denom), 1.0);
  if (r > 0 && smallest_singular_value(denom) <= tol * scale)
    throw ValidationError("mobius_apply: pole hits spectrum");
  Matrix numer = m.a * cfg.A + m.b * Matrix::Identity(r, r);
  Configuration out;
  // (aA + b)(cA + d)^{-1}: solve from the right via transposes.
  out.A = (denom.transpose().partialPivLu().solve(numer.transpose())).transpose();
  out.iota = cfg.iota;
  out.region = transform_region(cfg.region, m);
  return out;
}

Configuration restrict(const Configuration& cfg, const Contour& c, double boundary_tol,
                       SpectralSide side) {
  if (boundary_tol <= 0.0) boundary_tol = kBoundaryTolRel * c.diameter();
  const int r = cfg.rank();
  Configuration out;
  if (r == 0) {
    out.A = Matrix::Zero(0, 0);
    out.iota = Matrix::Zero(0, cfg.dim_v());
    out.region = side == SpectralSide::Inside ? Region::interior_of(c) : Region::exterior_of(c);
    return out;
  }

  Eigen::ComplexEigenSolver<Matrix> es(cfg.A, true);
  int count_side = 0;
  double margin = std::numeric_limits<double>::max();
  for (int i = 0; i < r; ++i) {
    cplx lambda = es.eigenvalues()(i);
    margin = std::min(margin, c.distance(lambda));
    bool inside = c.contains(lambda);
    if ((side == SpectralSide::Inside) == inside) ++count_side;
  }
  if (margin < boundary_tol)
    throw ValidationError("restrict: spectrum touches contour");

  auto integrate = [&](int m) {
    Matrix P = resolvent_contour_integral(cfg.A, c, m);
    if (side == SpectralSide::Outside) P = Matrix::Identity(r, r) - P;
    return P;
  };
  ResolvedProjector rp = resolve_projector(integrate, c.quadrature_nodes());

  Eigen::JacobiSVD<Matrix> vsvd(es.eigenvectors());
  double vcond = vsvd.singularValues()(0) / vsvd.singularValues()(r - 1);
  if (vcond < 1e6 && rp.rank != count_side)
    throw ResolutionError("restrict: projector rank disagrees with eigenvalue count");

  const Matrix& F = rp.frame;
  out.A = F.adjoint() * cfg.A * F;
  out.iota = F.adjoint() * (rp.projector * cfg.iota);
  out.region = side == SpectralSide::Inside ? Region::interior_of(c) : Region::exterior_of(c);
  return out;
}

std::vector<cplx> default_chart_candidates() {
  std::vector<cplx> out;
  for (int i = 0; i < 16; ++i)
    out.push_back(3.0 * std::exp(kImag * (2.0 * kPi * i / 16.0)));
  return out;
}

ChartSelection chart_select(const MatrixLaurentPoly& p, const std::vector<cplx>& candidates,
                            double tol) {
  if (p.neg_degree() != 0)
    throw std::invalid_argument("chart_select: polynomial must have k = 0");
  std::vector<cplx> cands = candidates.empty() ? default_chart_candidates() : candidates;

  double best_margin = -1.0;
  cplx best_q = 0;
  for (cplx q : cands) {
    if (std::abs(q) <= 1.0 + 1e-9) continue;  // chart point must avoid the closed unit disk
    double margin = smallest_singular_value(eval(p, q));
    if (margin > best_margin) {
      best_margin = margin;
      best_q = q;
    }
  }
  if (best_margin <= tol)
    throw ValidationError("chart_select: no usable chart");

  const int l = p.pos_degree();
  const int d = p.dim();
  const double sign = (l % 2 == 0) ? 1.0 : -1.0;
  MatrixLaurentPoly theta(d, 0, l);
  for (int j = 0; j <= l; ++j) {
    double binom = 1.0;
    cplx qpow = 1.0;
    for (int m = 0; m <= j; ++m) {
      theta.set_coeff(l - j + m, theta.coeff(l - j + m) + sign * binom * qpow * p.coeff(j));
      binom = binom * (j - m) / (m + 1.0);
      qpow *= best_q;
    }
  }

  MobiusTransform mu = MobiusTransform::reciprocal_at(best_q);
  Contour target = mobius_circle_image(mu, Contour::unit_circle());
  return {best_q, std::move(theta), std::move(target), mu, best_margin};
}

}  // namespace bulkedge
