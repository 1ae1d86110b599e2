#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bulkedge {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr cplx kImag{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// Relative singular-value threshold below which a matrix counts as singular.
inline constexpr double kInvertibilityTol = 1e-8;

// Relative entry threshold for dropping extreme Laurent coefficients.
inline constexpr double kTrimTol = 1e-14;

// Eigenvalue-to-contour margin, relative to the contour diameter.
inline constexpr double kBoundaryTolRel = 1e-6;

// Frame and plaquette constants for projector fields.
inline constexpr double kFrameOrthoTol = 1e-10;
inline constexpr double kNeighborOverlapMin = 0.2;
inline constexpr double kChernRoundingTol = 0.05;

// Thrown when an input violates a mathematical precondition that no amount
// of refinement can fix (gap closed, spectrum on the contour, rank jump).
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a computation could not be resolved at the requested
// discretization; callers may retry with a finer grid or more nodes.
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double smallest_singular_value(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

}  // namespace bulkedge
