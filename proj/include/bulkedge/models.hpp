#pragma once

#include <map>
#include <string>
#include <vector>

#include "bulkedge/contour.hpp"
#include "bulkedge/matpoly.hpp"

namespace bulkedge {

// One Fourier term of a hopping coefficient: a_j(x) picks up c * e^{i m x}.
struct FourierTerm {
  int j = 0;  // power of z
  int m = 0;  // harmonic in x
  Matrix c;
};

// A parameter family of shift-operator symbols H_x(z) = sum_j a_j(x) z^j
// over x on the circle, together with the gap contour that separates the
// spectral part of interest.
struct ModelSpec {
  int schema = 1;
  std::string name;
  int d = 1, k = 0, l = 0;
  std::vector<FourierTerm> fourier;
  Contour gap = Contour::unit_circle();
};

MatrixLaurentPoly symbol_at(const ModelSpec& spec, double x);

struct GapReport {
  double margin = 0.0;  // min singular value of H_x(z) - lambda over the grid
  bool ok = false;
  double x_at = 0.0;  // location of the minimum
  cplx z_at{1, 0};
  cplx lambda_at{0, 0};
};

// Scans x (n1 nodes), z on the unit circle (n2 nodes) and lambda on the gap
// contour nodes; ok iff the minimum clearance exceeds the margin. Uses the
// symbol-spectrum identity sigma(H_x) = union over |z| = 1 of sigma(H_x(z)).
GapReport gap_check(const ModelSpec& spec, int n1 = 64, int n2 = 64, double margin = 1e-2);

// Built-in model zoo: "scalar_shift" (a), "ssh" (t), "qwz" (m),
// "hofstadter" (p, q), "hatano_nelson_x" (a).
ModelSpec builtin_model(const std::string& name,
                        const std::map<std::string, double>& params = {});

std::vector<std::string> builtin_names();

}  // namespace bulkedge
