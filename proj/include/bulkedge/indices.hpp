#pragma once

#include "bulkedge/confmap.hpp"
#include "bulkedge/models.hpp"
#include "bulkedge/projector_field.hpp"

namespace bulkedge {

// Contour-integral spectral projector of a single matrix, with idempotency
// and trace-integrality checks.
Matrix riesz_projector(const Matrix& M, const Contour& c, double boundary_tol = -1.0);

// Occupied-subspace field of H_x(z) over the (x, z-angle) torus; the
// projector at each node integrates the resolvent over the gap contour.
ProjectorField bulk_field(const ModelSpec& spec, int n1, int n2);

// Index-bundle field over the (x, gap-contour) torus: the linearized family
// z^k (H_x(z) - lambda) restricted to the open unit disk, ambient d(k+l).
ProjectorField edge_field(const ModelSpec& spec, int n1, int n2,
                          Linearization backend = Linearization::CompanionPencil);

// Lattice first Chern number by plaquette link phases:
// (1/2pi) sum arg det(F1*F2 . F2*F3 . F3*F4 . F4*F1), rounded with a
// guard on the pre-rounding residual. Plaquettes with |phase| >= pi/2 are
// inadmissible and demand a finer grid.
int chern_number(const ProjectorField& field);

struct RefinedIndex {
  int value = 0;
  bool converged = false;
  int n1 = 0, n2 = 0;  // grid at which the value stabilized (or the cap)
};

RefinedIndex refine_bulk_index(const ModelSpec& spec, int n1, int n2, int grid_cap = 256);
RefinedIndex refine_edge_index(const ModelSpec& spec, int n1, int n2, int grid_cap = 256,
                               Linearization backend = Linearization::CompanionPencil);

// Grid-refined indices; throw ResolutionError when the cap is hit without
// two consecutive agreeing integers.
int bulk_index(const ModelSpec& spec, int n1 = 16, int n2 = 16, int grid_cap = 256);
int edge_index(const ModelSpec& spec, int n1 = 16, int n2 = 16, int grid_cap = 256);

// Hermitian matrix path on [-1, 1] with invertible endpoints.
struct HermitianPath {
  std::vector<double> ts;
  std::vector<Matrix> mats;
};

// Endpoint formula: #(eigenvalues >= 0 at the right end) minus the same
// count at the left end.
int spectral_flow(const HermitianPath& path, double tol = 1e-8);

struct BranchCrossings {
  int up = 0;
  int down = 0;
};

// Sorted eigenvalue trajectories plus per-branch zero-crossing counts;
// diagnostic companion to spectral_flow.
struct FlowTrace {
  std::vector<double> ts;
  std::vector<RealVector> eigenvalues;  // per time, sorted ascending
  std::vector<BranchCrossings> crossings;
};

FlowTrace spectral_flow_trace(const HermitianPath& path);

struct IndexReport {
  int bulk = 0;
  int edge = 0;
  bool equal = false;
  bool converged = false;
  int bulk_n1 = 0, bulk_n2 = 0;
  int edge_n1 = 0, edge_n2 = 0;
  double gap_margin = 0.0;
  double runtime_ms = 0.0;
};

// Runs both index pipelines with independent grid refinement and reports
// the comparison; never silently fails (non-convergence is reported).
IndexReport verify_correspondence(const ModelSpec& spec, int n1 = 16, int n2 = 16,
                                  int grid_cap = 128);

}  // namespace bulkedge
