#include "minlab/symmetry.hpp"

#include <cmath>

#include "minlab/implicit.hpp"
#include "minlab/matlib.hpp"
#include "minlab/rng.hpp"

namespace minlab {

AmbientIsometry make_isometry(const MatrixXd& M) {
  if (M.rows() != M.cols())
    throw DimensionError("make_isometry: square matrix required");
  const MatrixXd gram = M.transpose() * M;
  const double dev =
      (gram - MatrixXd::Identity(M.rows(), M.cols())).cwiseAbs().maxCoeff();
  if (dev > 1e-10)
    throw ContractError("make_isometry: matrix is not orthogonal");
  AmbientIsometry iso;
  iso.matrix = M;
  iso.parity = determinant(M) > 0 ? 1 : -1;
  return iso;
}

HelicoidalReport helicoidal_check(const SurfaceHandle& handle,
                                  const AmbientIsometry& iso, const VectorXd& p,
                                  int n_samples, std::mt19937_64& rng) {
  if (handle.membership(p) > handle.on_tol)
    throw ContractError("helicoidal_check: p is not on the surface");

  HelicoidalReport report;
  report.fix_distance = (iso.apply(p) - p).norm();

  int preserved = 0;
  for (int i = 0; i < n_samples; ++i) {
    const VectorXd x = handle.sample_on(rng);
    if (handle.membership(iso.apply(x)) <= handle.on_tol) ++preserved;
  }
  report.preserve_fraction = double(preserved) / double(n_samples);

  int swapped = 0;
  for (int i = 0; i < n_samples; ++i) {
    VectorXd x;
    do {
      x = gaussian_vector(handle.ambient_dim, rng);
    } while (handle.membership(x) <= 10.0 * handle.on_tol);
    if (handle.side(iso.apply(x)) * handle.side(x) < 0.0) ++swapped;
  }
  report.swap_fraction = double(swapped) / double(n_samples);

  report.verdict = report.fix_distance <= 1e-10 &&
                   report.preserve_fraction == 1.0 && report.swap_fraction == 1.0;
  return report;
}

AmbientIsometry xi_swap(int p_dim) {
  if (p_dim < 1) throw ContractError("xi_swap: p >= 1 required");
  const int half = p_dim + 1;
  MatrixXd M = MatrixXd::Zero(2 * half, 2 * half);
  M.topRightCorner(half, half).setIdentity();
  M.bottomLeftCorner(half, half).setIdentity();
  return make_isometry(M);
}

namespace {

void require_on_equal_torus(const VectorXd& q, int p_dim) {
  const int half = p_dim + 1;
  if (q.size() != 2 * half)
    throw DimensionError("eta_conjugator: wrong ambient dimension");
  const double c = 1.0 / std::sqrt(2.0);
  if (std::abs(q.head(half).norm() - c) > 1e-10 ||
      std::abs(q.tail(half).norm() - c) > 1e-10)
    throw ContractError("eta_conjugator: q is not on the torus");
}

}  // namespace

AmbientIsometry eta_conjugator(const VectorXd& q, int p_dim) {
  require_on_equal_torus(q, p_dim);
  const int half = p_dim + 1;
  const VectorXd u1 = q.head(half).normalized();
  const VectorXd u2 = q.tail(half).normalized();
  // rotate both factors onto a common direction; picking the bisector makes
  // eta the identity when q already has the fixed-point form (a, a)
  VectorXd target = u1 + u2;
  if (target.norm() < 1e-8)
    target = VectorXd::Unit(half, 0);
  target.normalize();
  const MatrixXd R1 = rotation_taking(u1, target);
  const MatrixXd R2 = rotation_taking(u2, target);
  MatrixXd M = MatrixXd::Zero(2 * half, 2 * half);
  M.topLeftCorner(half, half) = R1;
  M.bottomRightCorner(half, half) = R2;
  return make_isometry(M);
}

AmbientIsometry conjugated_xi(const VectorXd& q, int p_dim) {
  const AmbientIsometry eta = eta_conjugator(q, p_dim);
  const AmbientIsometry xi = xi_swap(p_dim);
  return make_isometry(eta.matrix.transpose() * xi.matrix * eta.matrix);
}

MatrixXd left_multiply_operator(const MatrixXd& A) {
  const int n = static_cast<int>(A.rows());
  MatrixXd K = MatrixXd::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) K(i * n + j, k * n + j) = A(i, k);
  return K;
}

MatrixXd skew_conjugation_operator(const MatrixXd& B) {
  const int m = static_cast<int>(B.rows());
  const int dim = m * (m - 1) / 2;
  MatrixXd C(dim, dim);
  for (int j = 0; j < dim; ++j) {
    const MatrixXd E = skew_from_upper(VectorXd::Unit(dim, j));
    C.col(j) = upper_from_skew(antisymmetrize(B.transpose() * E * B));
  }
  return C;
}

AmbientIsometry det_helicoidal_at(const MatrixXd& X) {
  if (X.rows() != X.cols())
    throw DimensionError("det_helicoidal_at: square matrix required");
  const SvdResult dec = svd(X);
  const double delta = 1e-8 * dec.sigma(0);
  const VectorXd v = left_null_vector(X, delta);
  const MatrixXd A = householder_reflection(v);
  return make_isometry(left_multiply_operator(A));
}

AmbientIsometry pf_helicoidal_at(const MatrixXd& X) {
  require_skew(X, "pf_helicoidal_at");
  const int m = static_cast<int>(X.rows());
  if (m % 2 != 0 || m < 4)
    throw DimensionError("pf_helicoidal_at: even size >= 4 required");
  const SvdResult dec = svd(X);
  const double delta = 1e-8 * dec.sigma(0);
  if (dec.sigma(m - 1) > delta || dec.sigma(m - 2) > delta)
    throw NonRegularPointError("pf_helicoidal_at: non-regular point (full rank)");
  if (dec.sigma(m - 3) <= 1e-3 * dec.sigma(0))
    throw NonRegularPointError("pf_helicoidal_at: non-regular point (rank < 2n-2)");

  // reflection swapping the two kernel directions, identity on the range
  const VectorXd u = dec.U.col(m - 2);
  const VectorXd w = dec.U.col(m - 1);
  MatrixXd B = MatrixXd::Identity(m, m);
  B -= u * u.transpose() + w * w.transpose();
  B += u * w.transpose() + w * u.transpose();
  return make_isometry(skew_conjugation_operator(B));
}

CrosscheckReport symmetry_crosscheck(const CrosscheckScenario& scenario,
                                     int n_points, int n_samples,
                                     std::uint64_t seed) {
  CrosscheckReport report;
  for (int i = 0; i < n_points; ++i) {
    auto rng = rng_stream(seed, static_cast<std::uint64_t>(i));
    const auto [x, residual] = scenario.sample_point(rng);
    const AmbientIsometry iso = scenario.iso_at(x);
    const HelicoidalReport h =
        helicoidal_check(scenario.handle, iso, x, n_samples, rng);
    CrosscheckPoint pt;
    pt.helicoidal_pass = h.verdict;
    pt.residual = residual;
    if (!pt.helicoidal_pass || pt.residual > scenario.residual_tol)
      ++report.failures;
    report.points.push_back(pt);
  }
  return report;
}

}  // namespace minlab
