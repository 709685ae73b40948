#pragma once

#include <Eigen/Dense>
#include <vector>

#include "minlab/errors.hpp"

namespace minlab {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct SvdResult {
  MatrixXd U;       // orthogonal
  VectorXd sigma;   // nonnegative, descending
  MatrixXd V;       // orthogonal
};

// Orthogonal block-diagonalization of a skew-symmetric matrix:
// Q^T X Q = Lambda, Lambda built from 2x2 blocks [[0, l_k], [-l_k, 0]].
// lambdas are nonnegative and sorted descending; signs are absorbed into Q.
struct SkewCanonicalForm {
  MatrixXd Q;
  VectorXd lambdas;  // size rows/2, zeros allowed

  MatrixXd lambda_matrix() const;              // the block-diagonal Lambda
  MatrixXd reconstruct() const;                // Q Lambda Q^T
};

double determinant(const MatrixXd& M);

SvdResult svd(const MatrixXd& M);

// Unit v with v^T M = 0, for square M of corank exactly one (relative to
// delta). Sign convention: first nonzero component positive.
VectorXd left_null_vector(const MatrixXd& M, double delta);

// Exact expansion of the Pfaffian for skew 2n x 2n, 2n <= 8.
double pfaffian_combinatorial(const MatrixXd& A);

// Skew block reduction with partial pivoting; works for all even sizes.
double pfaffian_fast(const MatrixXd& A);

SkewCanonicalForm skew_canonical_form(const MatrixXd& X);

// I - 2 v v^T for unit v: orthogonal, involutive, det -1.
MatrixXd householder_reflection(const VectorXd& v);

// R in SO(k) with R u = v, identity on the complement of span{u, v}.
// Antipodal pairs go through an intermediate coordinate direction.
MatrixXd rotation_taking(const VectorXd& u, const VectorXd& v);

// Entry (i,j) = d det / d x_ij (Jacobi's formula); valid for singular X too.
MatrixXd cofactor_matrix(const MatrixXd& X);

// Second derivatives of det: H[(i,j),(k,l)] = d^2 det / dx_ij dx_kl, as an
// n^2 x n^2 matrix in row-major index order. Exact (second-order cofactors).
MatrixXd det_second_derivative(const MatrixXd& X);

// (M - M^T) / 2
MatrixXd antisymmetrize(const MatrixXd& M);

bool is_skew(const MatrixXd& M, double tol = 1e-12);

void require_skew(const MatrixXd& M, const char* where);

}  // namespace minlab
