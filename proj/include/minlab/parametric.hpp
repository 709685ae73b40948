#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "minlab/errors.hpp"

namespace minlab {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Value and first/second partials of a chart map at one chart point.
struct ImmersionJet {
  VectorXd value;                  // N
  MatrixXd jacobian;               // N x k
  std::vector<MatrixXd> hessian;   // N matrices, each k x k
};

struct Immersion {
  int chart_dim = 0;
  int ambient_dim = 0;
  std::optional<double> sphere_radius;
  VectorXd domain_lo, domain_hi;   // sample box, margins keep clear of chart poles
  std::function<ImmersionJet(const VectorXd&)> eval;

  VectorXd sample_chart_point(std::mt19937_64& rng) const;
};

struct MetricJet {
  MatrixXd g;       // Gram matrix of the first partials
  MatrixXd g_inv;
  double det_g = 0.0;
};

MetricJet metric_at(const Immersion& imm, const VectorXd& phi);

// Divergence-form Laplace-Beltrami of the chart map; metric derivatives by
// central differences of the exact metric (step h).
VectorXd laplace_beltrami_at(const Immersion& imm, const VectorXd& phi,
                             double h = 1e-5);

// Mean curvature vector within the ambient sphere: projection of the traced
// second partials onto the complement of span{tangents, position}.
VectorXd mean_curvature_sphere_at(const Immersion& imm, const VectorXd& phi);

// || Laplacian(m) + k m || with k = chart_dim; zero certifies minimality in
// the unit sphere.
double sphere_minimality_residual(const Immersion& imm, const VectorXd& phi,
                                  double h = 1e-5);

// (sqrt(n1/(n1+n2)) m1, sqrt(n2/(n1+n2)) m2): minimal whenever both factors
// are minimal in their unit spheres.
Immersion scaled_product(const Immersion& imm1, const Immersion& imm2);

// Standard angular chart of the unit k-sphere.
Immersion great_sphere(int k);

Immersion generalized_clifford(int p, int q);

// S^1(r) x S^1(sqrt(1-r^2)) in S^3; minimal only for r = 1/sqrt(2).
Immersion torus_with_radii(double r);

// S^2(r) at height sqrt(1-r^2) in S^3; non-minimal control for r < 1.
Immersion small_sphere(double r);

// Same surface with jacobian/hessian replaced by central finite differences
// of the value (the "fd" derivative mode).
Immersion with_fd_jets(const Immersion& imm, double h = 1e-5);

// Independent finite-difference jet of the chart map, for cross-validation.
ImmersionJet finite_difference_jet(const Immersion& imm, const VectorXd& phi,
                                   double h = 1e-5);

}  // namespace minlab
