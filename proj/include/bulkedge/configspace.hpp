#pragma once

#include <optional>
#include <vector>

#include "bulkedge/contour.hpp"
#include "bulkedge/matpoly.hpp"
#include "bulkedge/mobius.hpp"
#include "bulkedge/types.hpp"

namespace bulkedge {

// Spectral constraint attached to a configuration.
class Region {
 public:
  enum class Kind { OpenUnitDisk, InteriorOf, ExteriorOf, FullPlane };

  static Region unit_disk() { return Region(Kind::OpenUnitDisk, std::nullopt); }
  static Region full_plane() { return Region(Kind::FullPlane, std::nullopt); }
  static Region interior_of(Contour c) { return Region(Kind::InteriorOf, std::move(c)); }
  static Region exterior_of(Contour c) { return Region(Kind::ExteriorOf, std::move(c)); }

  Kind kind() const { return kind_; }
  const std::optional<Contour>& contour() const { return contour_; }

  bool contains(cplx z) const;
  // Positive when z lies inside the region with that clearance to the
  // boundary, negative outside. FullPlane reports a large constant.
  double signed_distance(cplx z) const;

 private:
  Region(Kind k, std::optional<Contour> c) : kind_(k), contour_(std::move(c)) {}
  Kind kind_;
  std::optional<Contour> contour_;
};

// A pair (A, iota) with A r x r and iota : V -> C^r, considered up to the
// GL_r action g . (A, iota) = (g A g^{-1}, g iota). Valid configurations have
// full-rank controllability matrix [iota, A iota, ..., A^{r-1} iota] and,
// when a region is attached, all eigenvalues of A inside it.
struct Configuration {
  Matrix A;
  Matrix iota;
  std::optional<Region> region;

  int rank() const { return static_cast<int>(A.rows()); }
  int dim_v() const { return static_cast<int>(iota.cols()); }
};

Matrix controllability_matrix(const Configuration& cfg);

struct ValidationReport {
  double controllability_margin = 0.0;
  double spectral_margin = 0.0;
  bool ok = false;
};

ValidationReport validate(const Configuration& cfg, double tol = 1e-8);

// Unique g with g A1 g^{-1} = A2 and g iota1 = iota2 when the
// configurations are equivalent; nullopt otherwise. The candidate is
// K2 * pinv(K1) from the controllability matrices and then verified
// against the relative residual tolerance.
std::optional<Matrix> gl_equivalence(const Configuration& c1, const Configuration& c2,
                                     double tol = 1e-6);

// Functional calculus (a A + b)(c A + d)^{-1} on the A part; iota unchanged.
// The region is mapped along when this is exactly representable (circle
// kinds and affine maps) and dropped otherwise.
Configuration mobius_apply(const Configuration& cfg, const MobiusTransform& m,
                           double tol = kInvertibilityTol);

enum class SpectralSide { Inside, Outside };

// Restriction to the generalized eigenspaces with eigenvalues on the given
// side of the contour: (A_W, proj_W o iota) via the contour-integral
// projector, returned in an orthonormal basis of its range.
Configuration restrict(const Configuration& cfg, const Contour& c,
                       double boundary_tol = -1.0,
                       SpectralSide side = SpectralSide::Inside);

// Sixteen points on |q| = 3, deterministic order.
std::vector<cplx> default_chart_candidates();

struct ChartSelection {
  cplx chart_point;               // q
  MatrixLaurentPoly transformed;  // (-z)^l p(1/z + q), invertible leading coeff
  Contour target_contour;         // image of the unit circle under mu_q
  MobiusTransform mobius;         // mu_q(z) = 1 / (z - q)
  double margin;                  // smallest singular value of p(q)
};

// Picks the chart point maximizing the smallest singular value of p(q)
// among candidates outside the closed unit disk.
ChartSelection chart_select(const MatrixLaurentPoly& p,
                            const std::vector<cplx>& candidates = {},
                            double tol = 1e-10);

}  // namespace bulkedge
