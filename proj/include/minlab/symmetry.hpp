#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "minlab/errors.hpp"

namespace minlab {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Linear orthogonal map of the ambient space; restricts to a sphere isometry.
struct AmbientIsometry {
  MatrixXd matrix;
  int parity = 1;  // sign of det

  VectorXd apply(const VectorXd& x) const { return matrix * x; }
};

// Validates orthogonality (1e-10) and stores the parity.
AmbientIsometry make_isometry(const MatrixXd& M);

// Membership/side access to one surface, for the helicoidal conditions.
struct SurfaceHandle {
  int ambient_dim = 0;
  double on_tol = 1e-10;
  std::function<double(const VectorXd&)> membership;  // >= 0, ~0 on the surface
  std::function<double(const VectorXd&)> side;        // signed domain indicator
  std::function<VectorXd(std::mt19937_64&)> sample_on;
};

struct HelicoidalReport {
  double fix_distance = 0.0;
  double preserve_fraction = 0.0;  // on-surface samples staying on the surface
  double swap_fraction = 0.0;      // off-surface samples whose side flips
  bool verdict = false;
};

// The three conditions of the helicoidal definition, evaluated at p on
// n_samples on-surface and n_samples off-surface points.
HelicoidalReport helicoidal_check(const SurfaceHandle& handle,
                                  const AmbientIsometry& iso, const VectorXd& p,
                                  int n_samples, std::mt19937_64& rng);

// Block-swap reflection (x_1..x_{p+1}, y_1..y_{p+1}) -> (y, x) on R^{2p+2}.
AmbientIsometry xi_swap(int p_dim);

// Block rotation moving a point q of S^p(1/sqrt2) x S^p(1/sqrt2) to the
// fixed-point form (a, a); preserves the torus and both sides.
AmbientIsometry eta_conjugator(const VectorXd& q, int p_dim);

// eta^-1 . xi . eta: helicoidal isometry of the torus fixing q.
AmbientIsometry conjugated_xi(const VectorXd& q, int p_dim);

// Reflection A with A X = X for corank-1 X, lifted to Y -> A Y on the
// row-major flattened matrix space; flips the sign of det.
AmbientIsometry det_helicoidal_at(const MatrixXd& X);

// Kernel-swap reflection B for rank-(2n-2) skew X, lifted to Y -> B^T Y B on
// the strict-upper-triangle coordinates; flips the sign of pf.
AmbientIsometry pf_helicoidal_at(const MatrixXd& X);

// Y -> A Y as a matrix on row-major flattened n x n matrices.
MatrixXd left_multiply_operator(const MatrixXd& A);

// Y -> B^T Y B restricted to skew matrices, as a matrix on the
// strict-upper-triangle coordinates.
MatrixXd skew_conjugation_operator(const MatrixXd& B);

// One surface with both a helicoidal-isometry constructor and a minimality
// residual; sample_point draws an on-surface point with its residual.
struct CrosscheckScenario {
  SurfaceHandle handle;
  std::function<std::pair<VectorXd, double>(std::mt19937_64&)> sample_point;
  std::function<AmbientIsometry(const VectorXd&)> iso_at;
  double residual_tol = 1e-6;
};

struct CrosscheckPoint {
  bool helicoidal_pass = false;
  double residual = 0.0;
};

struct CrosscheckReport {
  std::vector<CrosscheckPoint> points;
  int failures = 0;  // points failing either the check or the residual bound
};

CrosscheckReport symmetry_crosscheck(const CrosscheckScenario& scenario,
                                     int n_points, int n_samples,
                                     std::uint64_t seed);

}  // namespace minlab
