#include "minlab/parametric.hpp"

#include <Eigen/QR>
#include <cmath>

#include "minlab/autodiff.hpp"

namespace minlab {

namespace {

constexpr double kPoleMargin = 0.1;

ImmersionJet pack(const std::vector<Dual2>& x, int k) {
  ImmersionJet jet;
  const int N = static_cast<int>(x.size());
  jet.value.resize(N);
  jet.jacobian.resize(N, k);
  jet.hessian.resize(N);
  for (int i = 0; i < N; ++i) {
    jet.value(i) = x[i].val;
    jet.jacobian.row(i) = x[i].grad.transpose();
    jet.hessian[i] = x[i].hess;
  }
  return jet;
}

std::vector<Dual2> seed_variables(const VectorXd& phi) {
  const int k = static_cast<int>(phi.size());
  std::vector<Dual2> t;
  t.reserve(k);
  for (int i = 0; i < k; ++i) t.push_back(Dual2::variable(phi(i), k, i));
  return t;
}

}  // namespace

VectorXd Immersion::sample_chart_point(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  VectorXd phi(chart_dim);
  for (int i = 0; i < chart_dim; ++i)
    phi(i) = domain_lo(i) + (domain_hi(i) - domain_lo(i)) * unif(rng);
  return phi;
}

MetricJet metric_at(const Immersion& imm, const VectorXd& phi) {
  const ImmersionJet jet = imm.eval(phi);
  MetricJet m;
  m.g = jet.jacobian.transpose() * jet.jacobian;
  m.det_g = m.g.determinant();
  if (m.det_g <= 1e-12)
    throw ContractError("metric_at: not an immersion here");
  m.g_inv = m.g.inverse();
  return m;
}

VectorXd laplace_beltrami_at(const Immersion& imm, const VectorXd& phi, double h) {
  const int k = imm.chart_dim;
  const ImmersionJet jet = imm.eval(phi);
  const MetricJet met = metric_at(imm, phi);
  const double sqrt_g = std::sqrt(met.det_g);

  // F^{ab} = sqrt(g) g^{ab}; need d_a F^{ab}
  auto F = [&](const VectorXd& p) -> MatrixXd {
    const MetricJet mj = metric_at(imm, p);
    return std::sqrt(mj.det_g) * mj.g_inv;
  };
  std::vector<MatrixXd> dF(k);
  for (int a = 0; a < k; ++a) {
    VectorXd pp = phi, pm = phi;
    pp(a) += h;
    pm(a) -= h;
    dF[a] = (F(pp) - F(pm)) / (2.0 * h);
  }

  VectorXd lap = VectorXd::Zero(imm.ambient_dim);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      lap += (dF[a](a, b) / sqrt_g) * jet.jacobian.col(b);
      for (int i = 0; i < imm.ambient_dim; ++i)
        lap(i) += met.g_inv(a, b) * jet.hessian[i](a, b);
    }
  return lap;
}

VectorXd mean_curvature_sphere_at(const Immersion& imm, const VectorXd& phi) {
  if (!imm.sphere_radius)
    throw ContractError("mean_curvature_sphere_at: immersion has no ambient sphere");
  const ImmersionJet jet = imm.eval(phi);
  const MetricJet met = metric_at(imm, phi);
  const int k = imm.chart_dim;

  VectorXd rough = VectorXd::Zero(imm.ambient_dim);
  for (int i = 0; i < imm.ambient_dim; ++i)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        rough(i) += met.g_inv(a, b) * jet.hessian[i](a, b);

  // project out tangents and the position direction
  MatrixXd span(imm.ambient_dim, k + 1);
  span.leftCols(k) = jet.jacobian;
  span.col(k) = jet.value;
  Eigen::HouseholderQR<MatrixXd> qr(span);
  MatrixXd Q = qr.householderQ() * MatrixXd::Identity(imm.ambient_dim, k + 1);
  return rough - Q * (Q.transpose() * rough);
}

double sphere_minimality_residual(const Immersion& imm, const VectorXd& phi,
                                  double h) {
  if (!imm.sphere_radius || std::abs(*imm.sphere_radius - 1.0) > 1e-12)
    throw ContractError("sphere_minimality_residual: unit ambient sphere required");
  const VectorXd lap = laplace_beltrami_at(imm, phi, h);
  const VectorXd m = imm.eval(phi).value;
  return (lap + static_cast<double>(imm.chart_dim) * m).norm();
}

Immersion scaled_product(const Immersion& imm1, const Immersion& imm2) {
  for (const Immersion* f : {&imm1, &imm2})
    if (!f->sphere_radius || std::abs(*f->sphere_radius - 1.0) > 1e-12)
      throw ContractError("scaled_product: factors must live in unit spheres");

  const int n1 = imm1.chart_dim, n2 = imm2.chart_dim;
  const int N1 = imm1.ambient_dim, N2 = imm2.ambient_dim;
  const double c1 = std::sqrt(double(n1) / double(n1 + n2));
  const double c2 = std::sqrt(double(n2) / double(n1 + n2));

  Immersion out;
  out.chart_dim = n1 + n2;
  out.ambient_dim = N1 + N2;
  out.sphere_radius = 1.0;
  out.domain_lo.resize(n1 + n2);
  out.domain_hi.resize(n1 + n2);
  out.domain_lo << imm1.domain_lo, imm2.domain_lo;
  out.domain_hi << imm1.domain_hi, imm2.domain_hi;

  out.eval = [imm1, imm2, n1, n2, N1, N2, c1, c2](const VectorXd& phi) {
    const ImmersionJet j1 = imm1.eval(phi.head(n1));
    const ImmersionJet j2 = imm2.eval(phi.tail(n2));
    const int k = n1 + n2;
    ImmersionJet jet;
    jet.value.resize(N1 + N2);
    jet.value << c1 * j1.value, c2 * j2.value;
    jet.jacobian = MatrixXd::Zero(N1 + N2, k);
    jet.jacobian.topLeftCorner(N1, n1) = c1 * j1.jacobian;
    jet.jacobian.bottomRightCorner(N2, n2) = c2 * j2.jacobian;
    jet.hessian.assign(N1 + N2, MatrixXd::Zero(k, k));
    for (int i = 0; i < N1; ++i)
      jet.hessian[i].topLeftCorner(n1, n1) = c1 * j1.hessian[i];
    for (int i = 0; i < N2; ++i)
      jet.hessian[N1 + i].bottomRightCorner(n2, n2) = c2 * j2.hessian[i];
    return jet;
  };
  return out;
}

Immersion great_sphere(int k) {
  if (k < 1) throw ContractError("great_sphere: k >= 1 required");
  Immersion imm;
  imm.chart_dim = k;
  imm.ambient_dim = k + 1;
  imm.sphere_radius = 1.0;
  imm.domain_lo = VectorXd::Constant(k, kPoleMargin);
  imm.domain_hi.resize(k);
  for (int i = 0; i + 1 < k; ++i) imm.domain_hi(i) = M_PI - kPoleMargin;
  imm.domain_hi(k - 1) = 2.0 * M_PI - kPoleMargin;

  imm.eval = [k](const VectorXd& phi) {
    const auto t = seed_variables(phi);
    std::vector<Dual2> x(k + 1);
    Dual2 prod(1.0, k);
    for (int i = 0; i < k; ++i) {
      x[i] = prod * cos(t[i]);
      prod = prod * sin(t[i]);
    }
    x[k] = prod;
    return pack(x, k);
  };
  return imm;
}

Immersion generalized_clifford(int p, int q) {
  return scaled_product(great_sphere(p), great_sphere(q));
}

Immersion torus_with_radii(double r) {
  if (!(r > 0.0 && r < 1.0))
    throw ContractError("torus_with_radii: r in (0,1) required");
  const double s = std::sqrt(1.0 - r * r);
  Immersion imm;
  imm.chart_dim = 2;
  imm.ambient_dim = 4;
  imm.sphere_radius = 1.0;
  imm.domain_lo = VectorXd::Constant(2, kPoleMargin);
  imm.domain_hi = VectorXd::Constant(2, 2.0 * M_PI - kPoleMargin);
  imm.eval = [r, s](const VectorXd& phi) {
    const auto t = seed_variables(phi);
    std::vector<Dual2> x(4);
    x[0] = r * cos(t[0]);
    x[1] = r * sin(t[0]);
    x[2] = s * cos(t[1]);
    x[3] = s * sin(t[1]);
    return pack(x, 2);
  };
  return imm;
}

Immersion small_sphere(double r) {
  if (!(r > 0.0 && r <= 1.0))
    throw ContractError("small_sphere: r in (0,1] required");
  const double height = std::sqrt(1.0 - r * r);
  Immersion imm;
  imm.chart_dim = 2;
  imm.ambient_dim = 4;
  imm.sphere_radius = 1.0;
  imm.domain_lo = VectorXd::Constant(2, kPoleMargin);
  imm.domain_hi.resize(2);
  imm.domain_hi << M_PI - kPoleMargin, 2.0 * M_PI - kPoleMargin;
  imm.eval = [r, height](const VectorXd& phi) {
    const auto t = seed_variables(phi);
    std::vector<Dual2> x(4);
    x[0] = r * sin(t[0]) * cos(t[1]);
    x[1] = r * sin(t[0]) * sin(t[1]);
    x[2] = r * cos(t[0]);
    x[3] = Dual2(height, 2);
    return pack(x, 2);
  };
  return imm;
}

ImmersionJet finite_difference_jet(const Immersion& imm, const VectorXd& phi,
                                   double h) {
  const int k = imm.chart_dim;
  auto value = [&](const VectorXd& p) { return imm.eval(p).value; };

  ImmersionJet jet;
  jet.value = value(phi);
  const int N = imm.ambient_dim;
  jet.jacobian.resize(N, k);
  jet.hessian.assign(N, MatrixXd::Zero(k, k));

  for (int a = 0; a < k; ++a) {
    VectorXd pp = phi, pm = phi;
    pp(a) += h;
    pm(a) -= h;
    const VectorXd vp = value(pp), vm = value(pm);
    jet.jacobian.col(a) = (vp - vm) / (2.0 * h);
    const VectorXd second = (vp - 2.0 * jet.value + vm) / (h * h);
    for (int i = 0; i < N; ++i) jet.hessian[i](a, a) = second(i);
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      VectorXd ppp = phi, ppm = phi, pmp = phi, pmm = phi;
      ppp(a) += h; ppp(b) += h;
      ppm(a) += h; ppm(b) -= h;
      pmp(a) -= h; pmp(b) += h;
      pmm(a) -= h; pmm(b) -= h;
      const VectorXd mixed =
          (value(ppp) - value(ppm) - value(pmp) + value(pmm)) / (4.0 * h * h);
      for (int i = 0; i < N; ++i) {
        jet.hessian[i](a, b) = mixed(i);
        jet.hessian[i](b, a) = mixed(i);
      }
    }
  return jet;
}

Immersion with_fd_jets(const Immersion& imm, double h) {
  Immersion out = imm;
  out.eval = [imm, h](const VectorXd& phi) {
    return finite_difference_jet(imm, phi, h);
  };
  return out;
}

}  // namespace minlab
