#include "minlab/matlib.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace minlab {

namespace {

void require_square(const MatrixXd& M, const char* where) {
  if (M.rows() != M.cols())
    throw DimensionError(std::string(where) + ": matrix must be square");
}

void require_finite(const MatrixXd& M, const char* where) {
  if (!M.allFinite())
    throw ContractError(std::string(where) + ": non-finite entries");
}

}  // namespace

MatrixXd antisymmetrize(const MatrixXd& M) {
  return 0.5 * (M - M.transpose());
}

bool is_skew(const MatrixXd& M, double tol) {
  if (M.rows() != M.cols()) return false;
  double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  return (M + M.transpose()).cwiseAbs().maxCoeff() <= tol * scale;
}

void require_skew(const MatrixXd& M, const char* where) {
  require_square(M, where);
  if (!is_skew(M))
    throw ContractError(std::string(where) + ": matrix is not skew-symmetric");
}

double determinant(const MatrixXd& M) {
  require_square(M, "determinant");
  require_finite(M, "determinant");
  return Eigen::PartialPivLU<MatrixXd>(M).determinant();
}

SvdResult svd(const MatrixXd& M) {
  require_finite(M, "svd");
  Eigen::JacobiSVD<MatrixXd> dec(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdResult{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

VectorXd left_null_vector(const MatrixXd& M, double delta) {
  require_square(M, "left_null_vector");
  const auto dec = svd(M);
  const Eigen::Index n = M.rows();
  if (dec.sigma(n - 1) > delta)
    throw NotSingularError("left_null_vector: not singular");
  if (n >= 2 && dec.sigma(n - 2) <= delta)
    throw NonRegularPointError("left_null_vector: non-regular point");
  VectorXd v = dec.U.col(n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

namespace {

// pf(A) = sum_j (-1)^j a_{0 j} pf(A with rows/cols 0, j removed),
// the perfect-matching collapse of the signed permutation sum.
double pfaffian_expand(const MatrixXd& A, std::vector<int>& idx) {
  const std::size_t m = idx.size();
  if (m == 0) return 1.0;
  double acc = 0.0;
  const int i0 = idx[0];
  std::vector<int> rest(m - 2);
  double sign = 1.0;
  for (std::size_t j = 1; j < m; ++j) {
    std::size_t r = 0;
    for (std::size_t t = 1; t < m; ++t)
      if (t != j) rest[r++] = idx[t];
    acc += sign * A(i0, idx[j]) * pfaffian_expand(A, rest);
    sign = -sign;
  }
  return acc;
}

}  // namespace

double pfaffian_combinatorial(const MatrixXd& A) {
  require_skew(A, "pfaffian_combinatorial");
  const Eigen::Index m = A.rows();
  if (m % 2 != 0)
    throw DimensionError("pfaffian_combinatorial: Pfaffian undefined for odd size");
  if (m > 8)
    throw DimensionError("pfaffian_combinatorial: size limited to 2n <= 8");
  std::vector<int> idx(m);
  std::iota(idx.begin(), idx.end(), 0);
  return pfaffian_expand(A, idx);
}

double pfaffian_fast(const MatrixXd& A) {
  require_skew(A, "pfaffian_fast");
  const Eigen::Index m = A.rows();
  if (m % 2 != 0)
    throw DimensionError("pfaffian_fast: Pfaffian undefined for odd size");
  if (m == 0) return 1.0;

  MatrixXd B = A;
  double pf = 1.0;
  for (Eigen::Index k = 0; k + 1 < m; k += 2) {
    // pivot the largest entry of column k below the diagonal into row k+1
    Eigen::Index ip = k + 1;
    double best = std::abs(B(k + 1, k));
    for (Eigen::Index i = k + 2; i < m; ++i) {
      if (std::abs(B(i, k)) > best) {
        best = std::abs(B(i, k));
        ip = i;
      }
    }
    if (best == 0.0) return 0.0;
    if (ip != k + 1) {
      B.row(k + 1).swap(B.row(ip));
      B.col(k + 1).swap(B.col(ip));
      pf = -pf;
    }
    pf *= B(k, k + 1);
    // congruence by unit-det Gauss transforms zeroing columns k, k+1 below
    // the 2x2 block; pf is invariant
    for (Eigen::Index i = k + 2; i < m; ++i) {
      const double t = B(i, k) / B(k + 1, k);
      if (t != 0.0) {
        B.row(i) -= t * B.row(k + 1);
        B.col(i) -= t * B.col(k + 1);
      }
    }
    for (Eigen::Index i = k + 2; i < m; ++i) {
      const double t = B(i, k + 1) / B(k, k + 1);
      if (t != 0.0) {
        B.row(i) -= t * B.row(k);
        B.col(i) -= t * B.col(k);
      }
    }
  }
  return pf;
}

MatrixXd SkewCanonicalForm::lambda_matrix() const {
  const Eigen::Index m = Q.rows();
  MatrixXd L = MatrixXd::Zero(m, m);
  for (Eigen::Index k = 0; k < lambdas.size(); ++k) {
    L(2 * k, 2 * k + 1) = lambdas(k);
    L(2 * k + 1, 2 * k) = -lambdas(k);
  }
  return L;
}

MatrixXd SkewCanonicalForm::reconstruct() const {
  return Q * lambda_matrix() * Q.transpose();
}

SkewCanonicalForm skew_canonical_form(const MatrixXd& X) {
  require_skew(X, "skew_canonical_form");
  const Eigen::Index m = X.rows();
  if (m % 2 != 0)
    throw DimensionError("skew_canonical_form: even dimension required");

  const double scale = std::max(1e-300, X.cwiseAbs().maxCoeff());

  // Skew matrices are normal, so the real Schur form is block diagonal with
  // 2x2 blocks [[0, l], [-l, 0]] and 1x1 zeros (kernel directions).
  Eigen::RealSchur<MatrixXd> schur(X);
  const MatrixXd& T = schur.matrixT();
  const MatrixXd& U = schur.matrixU();

  struct Pair {
    double lambda;
    Eigen::Index a, b;  // column indices in U
    bool flip;          // swap columns to make lambda >= 0
  };
  std::vector<Pair> pairs;
  std::vector<Eigen::Index> zeros;
  Eigen::Index i = 0;
  while (i < m) {
    if (i + 1 < m && std::abs(T(i + 1, i)) > 1e-13 * scale) {
      const double l = T(i, i + 1);
      pairs.push_back(Pair{std::abs(l), i, i + 1, l < 0});
      i += 2;
    } else {
      zeros.push_back(i);
      i += 1;
    }
  }
  for (std::size_t z = 0; z + 1 < zeros.size(); z += 2)
    pairs.push_back(Pair{0.0, zeros[z], zeros[z + 1], false});

  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Pair& p, const Pair& q) { return p.lambda > q.lambda; });

  SkewCanonicalForm form;
  form.Q.resize(m, m);
  form.lambdas.resize(m / 2);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    form.lambdas(static_cast<Eigen::Index>(k)) = pairs[k].lambda;
    const Eigen::Index ca = pairs[k].flip ? pairs[k].b : pairs[k].a;
    const Eigen::Index cb = pairs[k].flip ? pairs[k].a : pairs[k].b;
    form.Q.col(2 * static_cast<Eigen::Index>(k)) = U.col(ca);
    form.Q.col(2 * static_cast<Eigen::Index>(k) + 1) = U.col(cb);
  }
  return form;
}

MatrixXd householder_reflection(const VectorXd& v) {
  if (std::abs(v.norm() - 1.0) > 1e-12)
    throw ContractError("householder_reflection: v must be a unit vector");
  const Eigen::Index n = v.size();
  return MatrixXd::Identity(n, n) - 2.0 * v * v.transpose();
}

MatrixXd rotation_taking(const VectorXd& u, const VectorXd& v) {
  if (u.size() != v.size())
    throw DimensionError("rotation_taking: dimension mismatch");
  if (std::abs(u.norm() - 1.0) > 1e-12 || std::abs(v.norm() - 1.0) > 1e-12)
    throw ContractError("rotation_taking: unit vectors required");
  const Eigen::Index n = u.size();
  const double c = u.dot(v);

  if (c < -1.0 + 1e-12) {
    // antipodal: route through the lowest-index coordinate direction that is
    // not parallel to u
    Eigen::Index pick = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (1.0 - std::abs(u(i)) > 1e-8) {
        pick = i;
        break;
      }
    }
    VectorXd e = VectorXd::Unit(n, pick);
    VectorXd w = (e - u.dot(e) * u).normalized();
    return rotation_taking(w, v) * rotation_taking(u, w);
  }

  VectorXd w = v - c * u;
  const double s = w.norm();
  if (s < 1e-14) return MatrixXd::Identity(n, n);
  w /= s;
  // rotation by angle acos(c) in span{u, w}, identity on the complement
  MatrixXd R = MatrixXd::Identity(n, n);
  R += (c - 1.0) * (u * u.transpose() + w * w.transpose());
  R += s * (w * u.transpose() - u * w.transpose());
  return R;
}

MatrixXd cofactor_matrix(const MatrixXd& X) {
  require_square(X, "cofactor_matrix");
  const Eigen::Index n = X.rows();
  if (n == 1) return MatrixXd::Ones(1, 1);
  MatrixXd C(n, n);
  MatrixXd minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Eigen::Index r = 0;
      for (Eigen::Index a = 0; a < n; ++a) {
        if (a == i) continue;
        Eigen::Index s = 0;
        for (Eigen::Index b = 0; b < n; ++b) {
          if (b == j) continue;
          minor(r, s++) = X(a, b);
        }
        ++r;
      }
      C(i, j) = (((i + j) % 2 == 0) ? 1.0 : -1.0) * determinant(minor);
    }
  }
  return C;
}

MatrixXd det_second_derivative(const MatrixXd& X) {
  require_square(X, "det_second_derivative");
  const Eigen::Index n = X.rows();
  MatrixXd H = MatrixXd::Zero(n * n, n * n);
  if (n < 2) return H;
  MatrixXd minor(n - 2, n - 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      if (k == i) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index l = 0; l < n; ++l) {
          if (l == j) continue;
          Eigen::Index r = 0;
          for (Eigen::Index a = 0; a < n; ++a) {
            if (a == i || a == k) continue;
            Eigen::Index s = 0;
            for (Eigen::Index b = 0; b < n; ++b) {
              if (b == j || b == l) continue;
              minor(r, s++) = X(a, b);
            }
            ++r;
          }
          double sign = (((i + j + k + l) % 2 == 0) ? 1.0 : -1.0);
          if ((i < k) != (j < l)) sign = -sign;
          H(i * n + j, k * n + l) = sign * ((n == 2) ? 1.0 : determinant(minor));
        }
      }
    }
  }
  return H;
}

}  // namespace minlab
