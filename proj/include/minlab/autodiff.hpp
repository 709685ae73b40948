#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "minlab/errors.hpp"

namespace minlab {

// Second-order forward-mode scalar: carries value, gradient and Hessian with
// respect to a fixed set of k seed variables. Enough for metric and curvature
// jets without third-order terms.
class Dual2 {
 public:
  double val = 0.0;
  Eigen::VectorXd grad;   // k
  Eigen::MatrixXd hess;   // k x k

  Dual2() = default;

  Dual2(double v, int k)
      : val(v), grad(Eigen::VectorXd::Zero(k)), hess(Eigen::MatrixXd::Zero(k, k)) {}

  static Dual2 variable(double v, int k, int index) {
    Dual2 d(v, k);
    d.grad(index) = 1.0;
    return d;
  }

  int dim() const { return static_cast<int>(grad.size()); }

  Dual2 operator-() const {
    Dual2 r = *this;
    r.val = -r.val;
    r.grad = -r.grad;
    r.hess = -r.hess;
    return r;
  }

  Dual2& operator+=(const Dual2& o) {
    val += o.val;
    grad += o.grad;
    hess += o.hess;
    return *this;
  }
  Dual2& operator-=(const Dual2& o) {
    val -= o.val;
    grad -= o.grad;
    hess -= o.hess;
    return *this;
  }

  friend Dual2 operator+(Dual2 a, const Dual2& b) { return a += b; }
  friend Dual2 operator-(Dual2 a, const Dual2& b) { return a -= b; }

  friend Dual2 operator+(Dual2 a, double c) {
    a.val += c;
    return a;
  }
  friend Dual2 operator+(double c, Dual2 a) {
    a.val += c;
    return a;
  }
  friend Dual2 operator-(Dual2 a, double c) {
    a.val -= c;
    return a;
  }
  friend Dual2 operator-(double c, const Dual2& a) { return (-a) + c; }

  friend Dual2 operator*(const Dual2& a, const Dual2& b) {
    Dual2 r(a.val * b.val, a.dim());
    r.grad = a.grad * b.val + b.grad * a.val;
    r.hess = a.hess * b.val + b.hess * a.val + a.grad * b.grad.transpose() +
             b.grad * a.grad.transpose();
    return r;
  }
  friend Dual2 operator*(Dual2 a, double c) {
    a.val *= c;
    a.grad *= c;
    a.hess *= c;
    return a;
  }
  friend Dual2 operator*(double c, Dual2 a) { return a * c; }

  friend Dual2 operator/(const Dual2& a, const Dual2& b) { return a * inverse(b); }
  friend Dual2 operator/(Dual2 a, double c) { return a * (1.0 / c); }
  friend Dual2 operator/(double c, const Dual2& b) { return inverse(b) * c; }

  // chain rule for a scalar function with derivatives d1, d2 at this->val
  Dual2 lift(double f, double d1, double d2) const {
    Dual2 r(f, dim());
    r.grad = d1 * grad;
    r.hess = d1 * hess + d2 * grad * grad.transpose();
    return r;
  }

  friend Dual2 inverse(const Dual2& a) {
    const double v = a.val;
    return a.lift(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
  }
  friend Dual2 sin(const Dual2& a) {
    return a.lift(std::sin(a.val), std::cos(a.val), -std::sin(a.val));
  }
  friend Dual2 cos(const Dual2& a) {
    return a.lift(std::cos(a.val), -std::sin(a.val), -std::cos(a.val));
  }
  friend Dual2 sqrt(const Dual2& a) {
    const double s = std::sqrt(a.val);
    return a.lift(s, 0.5 / s, -0.25 / (s * a.val));
  }
  friend Dual2 exp(const Dual2& a) {
    const double e = std::exp(a.val);
    return a.lift(e, e, e);
  }
};

}  // namespace minlab
