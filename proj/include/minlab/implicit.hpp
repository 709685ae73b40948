#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "minlab/errors.hpp"

namespace minlab {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Smooth function on R^N whose zero set is the hypersurface under test.
struct ScalarField {
  int ambient_dim = 0;
  std::function<double(const VectorXd&)> value;
  std::function<VectorXd(const VectorXd&)> gradient;
  std::function<MatrixXd(const VectorXd&)> hessian;
  std::optional<int> degree;  // homogeneity degree, if the field is a cone
};

// Unit-norm point on the zero set, away from the singular locus.
struct VarietyPoint {
  VectorXd x;
  double regularity = 0.0;  // smallest retained relative spectral gap
};

// |laplacian(f) |grad f|^2 - grad f^T Hess(f) grad f| / |grad f|^3.
// Vanishes exactly where the level set has zero mean curvature.
double level_residual(const ScalarField& field, const VectorXd& x);

// f = det of the n x n matrix read off the coordinates (row-major).
ScalarField det_variety(int n);

// f = pf of the skew 2n x 2n matrix assembled from the strict upper
// triangle coordinates; derivatives via second-order AD, so 2n <= 8.
ScalarField pf_variety(int n);

// Strict-upper-triangle coordinate layout of the skew subspace, row by row,
// at unit scale: x(0) in slot (0,1), x(1) in (0,2), ...
MatrixXd skew_from_upper(const VectorXd& x);
VectorXd upper_from_skew(const MatrixXd& X);

// Coordinate chart of the skew subspace that is isometric for the Frobenius
// inner product tr(X^T Y): entries scaled by 1/sqrt(2).
MatrixXd mu_embed(const VectorXd& x);
VectorXd mu_inverse(const MatrixXd& X);

// attempts, when given, receives the number of draws used (for acceptance
// rate accounting).
VarietyPoint sample_det_variety(int n, std::mt19937_64& rng, int* attempts = nullptr);

VarietyPoint sample_pf_variety(int n, std::mt19937_64& rng, int* attempts = nullptr);

// Gaussian matrix/vector helpers with a shared convention.
MatrixXd gaussian_matrix(int rows, int cols, std::mt19937_64& rng);
VectorXd gaussian_vector(int n, std::mt19937_64& rng);

}  // namespace minlab
