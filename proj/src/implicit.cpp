#include "minlab/implicit.hpp"

#include <cmath>
#include <vector>

#include "minlab/autodiff.hpp"
#include "minlab/matlib.hpp"

namespace minlab {

namespace {

using DualMatrix = std::vector<std::vector<Dual2>>;

Dual2 pfaffian_expand_dual(const DualMatrix& A, const std::vector<int>& idx, int k) {
  const std::size_t m = idx.size();
  if (m == 0) return Dual2(1.0, k);
  Dual2 acc(0.0, k);
  const int i0 = idx[0];
  std::vector<int> rest(m - 2);
  double sign = 1.0;
  for (std::size_t j = 1; j < m; ++j) {
    std::size_t r = 0;
    for (std::size_t t = 1; t < m; ++t)
      if (t != j) rest[r++] = idx[t];
    acc += sign * (A[i0][idx[j]] * pfaffian_expand_dual(A, rest, k));
    sign = -sign;
  }
  return acc;
}

// pf of the skew matrix whose strict upper triangle is the coordinate
// vector, with full second-order derivatives.
Dual2 pfaffian_dual(const VectorXd& x, int m) {
  const int k = static_cast<int>(x.size());
  DualMatrix A(m, std::vector<Dual2>(m, Dual2(0.0, k)));
  int slot = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      A[i][j] = Dual2::variable(x(slot), k, slot);
      A[j][i] = -A[i][j];
      ++slot;
    }
  std::vector<int> idx(m);
  for (int i = 0; i < m; ++i) idx[i] = i;
  return pfaffian_expand_dual(A, idx, k);
}

int coord_count(int n) { return 2 * n * n - n; }

}  // namespace

double level_residual(const ScalarField& field, const VectorXd& x) {
  const VectorXd g = field.gradient(x);
  const double gn = g.norm();
  if (gn < 1e-6)
    throw NonRegularPointError("level_residual: singular point");
  const MatrixXd H = field.hessian(x);
  const double lap = H.trace();
  return std::abs(lap * gn * gn - g.dot(H * g)) / (gn * gn * gn);
}

ScalarField det_variety(int n) {
  if (n < 2) throw ContractError("det_variety: n >= 2 required");
  ScalarField f;
  f.ambient_dim = n * n;
  f.degree = n;
  auto reshape = [n](const VectorXd& x) {
    MatrixXd X(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) X(i, j) = x(i * n + j);
    return X;
  };
  f.value = [reshape](const VectorXd& x) { return determinant(reshape(x)); };
  f.gradient = [reshape, n](const VectorXd& x) {
    const MatrixXd C = cofactor_matrix(reshape(x));
    VectorXd g(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i * n + j) = C(i, j);
    return g;
  };
  f.hessian = [reshape](const VectorXd& x) {
    return det_second_derivative(reshape(x));
  };
  return f;
}

ScalarField pf_variety(int n) {
  if (n < 2) throw ContractError("pf_variety: n >= 2 required");
  if (2 * n > 8)
    throw ContractError("pf_variety: size unsupported for derivatives (2n > 8)");
  const int m = 2 * n;
  ScalarField f;
  f.ambient_dim = coord_count(n);
  f.degree = n;
  f.value = [m](const VectorXd& x) { return pfaffian_fast(skew_from_upper(x)); };
  f.gradient = [m](const VectorXd& x) { return pfaffian_dual(x, m).grad; };
  f.hessian = [m](const VectorXd& x) { return pfaffian_dual(x, m).hess; };
  return f;
}

MatrixXd skew_from_upper(const VectorXd& x) {
  // m(m-1)/2 = x.size()
  const int m = static_cast<int>((1.0 + std::sqrt(1.0 + 8.0 * x.size())) / 2.0 + 0.5);
  if (m * (m - 1) / 2 != x.size())
    throw DimensionError("skew_from_upper: size is not a triangular number");
  MatrixXd X = MatrixXd::Zero(m, m);
  int slot = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      X(i, j) = x(slot);
      X(j, i) = -x(slot);
      ++slot;
    }
  return X;
}

VectorXd upper_from_skew(const MatrixXd& X) {
  require_skew(X, "upper_from_skew");
  const int m = static_cast<int>(X.rows());
  VectorXd x(m * (m - 1) / 2);
  int slot = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) x(slot++) = X(i, j);
  return x;
}

// tr(X^T Y) doubles every off-diagonal product, so entries carry 1/sqrt(2)
// to make the chart isometric for the Euclidean product.
MatrixXd mu_embed(const VectorXd& x) {
  return skew_from_upper(x) * (1.0 / std::sqrt(2.0));
}

VectorXd mu_inverse(const MatrixXd& X) {
  return upper_from_skew(X) * std::sqrt(2.0);
}

MatrixXd gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  MatrixXd M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M(i, j) = normal(rng);
  return M;
}

VectorXd gaussian_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

VarietyPoint sample_det_variety(int n, std::mt19937_64& rng, int* attempts) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    if (attempts) ++*attempts;
    MatrixXd G = gaussian_matrix(n, n, rng);
    const SvdResult dec = svd(G);
    const double gap = dec.sigma(n - 2) / dec.sigma(0);
    if (gap <= 1e-3) continue;  // too close to corank >= 2
    VectorXd sigma = dec.sigma;
    sigma(n - 1) = 0.0;  // Eckart-Young projection onto corank 1
    MatrixXd X = dec.U * sigma.asDiagonal() * dec.V.transpose();
    X /= X.norm();
    VarietyPoint p;
    p.x.resize(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) p.x(i * n + j) = X(i, j);
    p.regularity = gap;
    return p;
  }
  throw SamplingError("sample_det_variety: retry budget exhausted");
}

VarietyPoint sample_pf_variety(int n, std::mt19937_64& rng, int* attempts) {
  if (2 * n > 8)
    throw ContractError("sample_pf_variety: 2n <= 8 required");
  const int m = 2 * n;
  for (int attempt = 0; attempt < 100; ++attempt) {
    if (attempts) ++*attempts;
    MatrixXd X = antisymmetrize(gaussian_matrix(m, m, rng));
    SkewCanonicalForm form = skew_canonical_form(X);
    const double gap = form.lambdas(n - 2) / form.lambdas(0);
    if (gap <= 1e-3) continue;  // gradient of pf would be too small
    form.lambdas(n - 1) = 0.0;  // drop the smallest block: rank 2n - 2
    VectorXd x = mu_inverse(form.reconstruct());
    x /= x.norm();
    VarietyPoint p;
    p.x = x;
    p.regularity = gap;
    return p;
  }
  throw SamplingError("sample_pf_variety: retry budget exhausted");
}

}  // namespace minlab
