#include "minlab/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "minlab/implicit.hpp"
#include "minlab/matlib.hpp"
#include "minlab/parametric.hpp"
#include "minlab/rng.hpp"

namespace minlab {

namespace {

CheckResult make_check(std::string name, const std::vector<double>& residuals,
                       double tol) {
  CheckResult c;
  c.name = std::move(name);
  c.samples = static_cast<int>(residuals.size());
  c.per_sample = residuals;
  for (double r : residuals) {
    c.max_residual = std::max(c.max_residual, r);
    c.mean_residual += r;
    if (r > tol) ++c.failures;
  }
  if (!residuals.empty()) c.mean_residual /= residuals.size();
  c.pass = (c.failures == 0);
  return c;
}

// checks that demand a LARGE residual (negative controls)
CheckResult make_floor_check(std::string name, const std::vector<double>& residuals,
                             double floor) {
  CheckResult c;
  c.name = std::move(name);
  c.samples = static_cast<int>(residuals.size());
  c.per_sample = residuals;
  for (double r : residuals) {
    c.max_residual = std::max(c.max_residual, r);
    c.mean_residual += r;
    if (r < floor) ++c.failures;
  }
  if (!residuals.empty()) c.mean_residual /= residuals.size();
  c.pass = (c.failures == 0);
  return c;
}

MatrixXd reshape_square(const VectorXd& x, int n) {
  MatrixXd X(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) X(i, j) = x(i * n + j);
  return X;
}

double rel(double err, double scale) { return err / std::max(1e-300, scale); }

// ---- scenario bodies ------------------------------------------------------

struct Ctx {
  ScenarioConfig cfg;
  double tol = 0.0;
  std::vector<CheckResult> checks;

  std::mt19937_64 stream(std::uint64_t block, std::uint64_t i) const {
    return rng_stream(cfg.seed, block * 1000000ULL + i);
  }
};

void product_pair_checks(Ctx& ctx, const std::string& name, std::uint64_t block,
                         const Immersion& f1, const Immersion& f2) {
  const Immersion prod = scaled_product(f1, f2);
  const Immersion res_imm =
      ctx.cfg.mode == "fd" ? with_fd_jets(prod) : prod;
  const int n1 = f1.chart_dim, n2 = f2.chart_dim;
  const double c1sq = double(n1) / double(n1 + n2);
  const double c2sq = double(n2) / double(n1 + n2);
  const double det_factor = std::pow(double(n1), n1) * std::pow(double(n2), n2) /
                            std::pow(double(n1 + n2), n1 + n2);

  std::vector<double> res, law_block, law_det;
  for (int i = 0; i < ctx.cfg.samples; ++i) {
    auto rng = ctx.stream(block, i);
    const VectorXd phi = prod.sample_chart_point(rng);
    res.push_back(sphere_minimality_residual(res_imm, phi));

    const MetricJet mp = metric_at(prod, phi);
    const MetricJet m1 = metric_at(f1, phi.head(n1));
    const MetricJet m2 = metric_at(f2, phi.tail(n2));
    MatrixXd block_g = MatrixXd::Zero(n1 + n2, n1 + n2);
    block_g.topLeftCorner(n1, n1) = c1sq * m1.g;
    block_g.bottomRightCorner(n2, n2) = c2sq * m2.g;
    law_block.push_back(rel((mp.g - block_g).cwiseAbs().maxCoeff(),
                            block_g.cwiseAbs().maxCoeff()));
    const double expected = det_factor * m1.det_g * m2.det_g;
    law_det.push_back(std::abs(mp.det_g - expected) / std::abs(expected));
  }
  ctx.checks.push_back(make_check(name + "-residual", res, ctx.tol));
  ctx.checks.push_back(make_check(name + "-block-metric", law_block, 1e-9));
  ctx.checks.push_back(make_check(name + "-metric-det", law_det, 1e-9));
}

void scenario_product(Ctx& ctx) {
  product_pair_checks(ctx, "s1-x-s1", 1, great_sphere(1), great_sphere(1));
  product_pair_checks(ctx, "s1-x-s2", 2, great_sphere(1), great_sphere(2));
  product_pair_checks(ctx, "s2-x-s3", 3, great_sphere(2), great_sphere(3));
  product_pair_checks(ctx, "clifford-x-s1", 4, generalized_clifford(1, 1),
                      great_sphere(1));
}

void scenario_clifford_like(Ctx& ctx, int p, int q) {
  const Immersion torus = generalized_clifford(p, q);
  const Immersion res_imm = ctx.cfg.mode == "fd" ? with_fd_jets(torus) : torus;
  std::vector<double> res, hnorm, orth;
  for (int i = 0; i < ctx.cfg.samples; ++i) {
    auto rng = ctx.stream(1, i);
    const VectorXd phi = torus.sample_chart_point(rng);
    res.push_back(sphere_minimality_residual(res_imm, phi));
    const VectorXd H = mean_curvature_sphere_at(torus, phi);
    hnorm.push_back(H.norm());
    const ImmersionJet jet = torus.eval(phi);
    double worst = std::abs(H.dot(jet.value));
    for (int a = 0; a < torus.chart_dim; ++a)
      worst = std::max(worst, std::abs(H.dot(jet.jacobian.col(a))));
    orth.push_back(worst);
  }
  ctx.checks.push_back(make_check("residual", res, ctx.tol));
  ctx.checks.push_back(make_check("mean-curvature-norm", hnorm, 1e-8));
  ctx.checks.push_back(make_check("normal-projection", orth, 1e-10));
  product_pair_checks(ctx, "metric-laws", 2, great_sphere(p), great_sphere(q));
}

void field_self_checks(Ctx& ctx, const ScalarField& field, std::uint64_t block) {
  const int N = field.ambient_dim;
  const double h = 1e-5;
  std::vector<double> euler, grad_fd, hess_fd;
  const int n_fd = std::min(ctx.cfg.samples, 10);
  for (int i = 0; i < n_fd; ++i) {
    auto rng = ctx.stream(block, i);
    const VectorXd x = gaussian_vector(N, rng);
    if (field.degree) {
      const double lhs = x.dot(field.gradient(x));
      const double rhs = *field.degree * field.value(x);
      euler.push_back(rel(std::abs(lhs - rhs), std::abs(rhs)));
    }
    const VectorXd g = field.gradient(x);
    const MatrixXd H = field.hessian(x);
    double gerr = 0.0, herr = 0.0;
    for (int a = 0; a < N; ++a) {
      VectorXd xp = x, xm = x;
      xp(a) += h;
      xm(a) -= h;
      gerr = std::max(gerr, std::abs((field.value(xp) - field.value(xm)) / (2 * h) - g(a)));
      const VectorXd hcol = (field.gradient(xp) - field.gradient(xm)) / (2 * h);
      herr = std::max(herr, (hcol - H.col(a)).cwiseAbs().maxCoeff());
    }
    grad_fd.push_back(rel(gerr, g.cwiseAbs().maxCoeff()));
    hess_fd.push_back(rel(herr, H.cwiseAbs().maxCoeff()));
  }
  if (!euler.empty())
    ctx.checks.push_back(make_check("euler-identity", euler, 1e-9));
  ctx.checks.push_back(make_check("gradient-fd", grad_fd, 1e-5));
  ctx.checks.push_back(make_check("hessian-fd", hess_fd, 1e-4));
}

void scenario_det_cone(Ctx& ctx, int n) {
  const ScalarField field = det_variety(n);
  std::vector<double> res, on;
  for (int i = 0; i < ctx.cfg.samples; ++i) {
    auto rng = ctx.stream(1, i);
    const VarietyPoint pt = sample_det_variety(n, rng);
    res.push_back(level_residual(field, pt.x));
    on.push_back(std::abs(field.value(pt.x)));
  }
  ctx.checks.push_back(make_check("level-residual", res, ctx.tol));
  ctx.checks.push_back(make_check("on-variety", on, 1e-12));
  field_self_checks(ctx, field, 2);
}

void scenario_pf_cone(Ctx& ctx, int n) {
  const ScalarField field = pf_variety(n);
  std::vector<double> res, on;
  int attempts = 0;
  for (int i = 0; i < ctx.cfg.samples; ++i) {
    auto rng = ctx.stream(1, i);
    const VarietyPoint pt = sample_pf_variety(n, rng, &attempts);
    res.push_back(level_residual(field, pt.x));
    on.push_back(std::abs(field.value(pt.x)));
  }
  ctx.checks.push_back(make_check("level-residual", res, ctx.tol));
  ctx.checks.push_back(make_check("on-variety", on, 1e-12));
  const double rate = double(ctx.cfg.samples) / double(attempts);
  ctx.checks.push_back(make_floor_check("sampler-acceptance", {rate}, 0.99));
  field_self_checks(ctx, field, 2);
}

void push_helicoidal(Ctx& ctx, const std::string& name,
                     const std::vector<HelicoidalReport>& reports) {
  std::vector<double> fix, preserve, swap;
  for (const auto& r : reports) {
    fix.push_back(r.fix_distance);
    preserve.push_back(1.0 - r.preserve_fraction);
    swap.push_back(1.0 - r.swap_fraction);
  }
  ctx.checks.push_back(make_check(name + "-fixed-point", fix, 1e-10));
  ctx.checks.push_back(make_check(name + "-preserves-surface", preserve, 0.0));
  ctx.checks.push_back(make_check(name + "-swaps-sides", swap, 0.0));
}

void scenario_helicoidal_clifford(Ctx& ctx) {
  const int n_check = std::min(ctx.cfg.samples, 200);
  for (int p : {1, 2}) {
    const SurfaceHandle handle = clifford_torus_handle(p);
    VectorXd pfix(2 * (p + 1));
    const double a = 1.0 / std::sqrt(2.0 * (p + 1));
    pfix.setConstant(a);

    auto rng = ctx.stream(10 + p, 0);
    std::vector<HelicoidalReport> fixed = {
        helicoidal_check(handle, xi_swap(p), pfix, n_check, rng)};
    push_helicoidal(ctx, "xi-p" + std::to_string(p), fixed);

    std::vector<HelicoidalReport> conj;
    for (int i = 0; i < 20; ++i) {
      auto rng_i = ctx.stream(20 + p, i);
      const VectorXd q = handle.sample_on(rng_i);
      conj.push_back(
          helicoidal_check(handle, conjugated_xi(q, p), q, n_check, rng_i));
    }
    push_helicoidal(ctx, "conjugated-xi-p" + std::to_string(p), conj);
  }
}

void scenario_helicoidal_det(Ctx& ctx, int n) {
  const SurfaceHandle handle = det_variety_handle(n);
  std::vector<HelicoidalReport> reports;
  std::vector<double> fixes_matrix;
  for (int i = 0; i < ctx.cfg.samples; ++i) {
    auto rng = ctx.stream(1, i);
    const VarietyPoint pt = sample_det_variety(n, rng);
    const MatrixXd X = reshape_square(pt.x, n);
    const AmbientIsometry iso = det_helicoidal_at(X);
    reports.push_back(helicoidal_check(handle, iso, pt.x, 50, rng));
    fixes_matrix.push_back((iso.apply(pt.x) - pt.x).norm());
  }
  push_helicoidal(ctx, "det-helicoidal", reports);
  ctx.checks.push_back(make_check("reflection-fixes-x", fixes_matrix, 1e-10));
}

void scenario_helicoidal_pf(Ctx& ctx, int n) {
  const SurfaceHandle handle = pf_variety_handle(n);
  std::vector<HelicoidalReport> reports;
  std::vector<double> fixes_matrix;
  for (int i = 0; i < ctx.cfg.samples; ++i) {
    auto rng = ctx.stream(1, i);
    const VarietyPoint pt = sample_pf_variety(n, rng);
    const MatrixXd X = skew_from_upper(pt.x);
    const AmbientIsometry iso = pf_helicoidal_at(X);
    reports.push_back(helicoidal_check(handle, iso, pt.x, 50, rng));
    fixes_matrix.push_back((iso.apply(pt.x) - pt.x).norm());
  }
  push_helicoidal(ctx, "pf-helicoidal", reports);
  ctx.checks.push_back(make_check("conjugation-fixes-x", fixes_matrix, 1e-10));
}

void push_crosscheck(Ctx& ctx, const std::string& name,
                     const CrosscheckScenario& sc, int n_points) {
  const CrosscheckReport rep = symmetry_crosscheck(sc, n_points, 50, ctx.cfg.seed);
  std::vector<double> res, hel;
  for (const auto& p : rep.points) {
    res.push_back(p.residual);
    hel.push_back(p.helicoidal_pass ? 0.0 : 1.0);
  }
  ctx.checks.push_back(make_check(name + "-residual", res, sc.residual_tol));
  ctx.checks.push_back(make_check(name + "-helicoidal", hel, 0.0));
}

void scenario_crosscheck(Ctx& ctx) {
  {  // Clifford torus: parametric residual at conjugated-reflection points
    const Immersion torus = generalized_clifford(1, 1);
    CrosscheckScenario sc;
    sc.handle = clifford_torus_handle(1);
    sc.residual_tol = 1e-6;
    sc.sample_point = [torus](std::mt19937_64& rng) {
      const VectorXd phi = torus.sample_chart_point(rng);
      return std::make_pair(torus.eval(phi).value,
                            sphere_minimality_residual(torus, phi));
    };
    sc.iso_at = [](const VectorXd& x) { return conjugated_xi(x, 1); };
    push_crosscheck(ctx, "clifford", sc, std::min(ctx.cfg.samples, 50));
  }
  {  // determinant cone, n = 3
    const ScalarField field = det_variety(3);
    CrosscheckScenario sc;
    sc.handle = det_variety_handle(3);
    sc.residual_tol = 1e-7;
    sc.sample_point = [field](std::mt19937_64& rng) {
      const VarietyPoint pt = sample_det_variety(3, rng);
      return std::make_pair(pt.x, level_residual(field, pt.x));
    };
    sc.iso_at = [](const VectorXd& x) {
      return det_helicoidal_at(reshape_square(x, 3));
    };
    push_crosscheck(ctx, "det-cone", sc, std::min(ctx.cfg.samples, 200));
  }
  {  // Pfaffian cone, n = 2
    const ScalarField field = pf_variety(2);
    CrosscheckScenario sc;
    sc.handle = pf_variety_handle(2);
    sc.residual_tol = 1e-7;
    sc.sample_point = [field](std::mt19937_64& rng) {
      const VarietyPoint pt = sample_pf_variety(2, rng);
      return std::make_pair(pt.x, level_residual(field, pt.x));
    };
    sc.iso_at = [](const VectorXd& x) {
      return pf_helicoidal_at(skew_from_upper(x));
    };
    push_crosscheck(ctx, "pf-cone", sc, std::min(ctx.cfg.samples, 100));
  }
  {  // non-minimal control: no catalog isometry may pass while residual != 0
    const Immersion control = torus_with_radii(0.6);
    const SurfaceHandle handle = torus_handle(0.6);
    const AmbientIsometry identity =
        make_isometry(MatrixXd::Identity(4, 4));
    std::vector<double> res, false_pos;
    const int n_pts = std::min(ctx.cfg.samples, 20);
    for (int i = 0; i < n_pts; ++i) {
      auto rng = ctx.stream(40, i);
      const VectorXd phi = control.sample_chart_point(rng);
      res.push_back(sphere_minimality_residual(control, phi));
      const VectorXd x = control.eval(phi).value;
      for (const AmbientIsometry* iso : {&identity}) {
        const HelicoidalReport r = helicoidal_check(handle, *iso, x, 50, rng);
        false_pos.push_back(r.verdict ? 1.0 : 0.0);
      }
      // xi does not fix generic points of the unequal torus; full check
      const HelicoidalReport r =
          helicoidal_check(handle, xi_swap(1), x, 50, rng);
      false_pos.push_back(r.verdict ? 1.0 : 0.0);
    }
    ctx.checks.push_back(make_floor_check("control-residual", res, 0.1));
    ctx.checks.push_back(make_check("control-no-false-positive", false_pos, 0.0));
  }
}

void scenario_congruence(Ctx& ctx) {
  const MatrixXd Tdet = clifford_det_witness();
  const MatrixXd Tpf = clifford_pf_witness();
  ctx.checks.push_back(make_check(
      "det-witness-orthogonal",
      {(Tdet.transpose() * Tdet - MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff()},
      1e-12));
  ctx.checks.push_back(make_check(
      "pf-witness-orthogonal",
      {(Tpf.transpose() * Tpf - MatrixXd::Identity(6, 6)).cwiseAbs().maxCoeff()},
      1e-12));

  const Immersion ct = generalized_clifford(1, 1);
  const ScalarField det2 = det_variety(2);
  std::vector<double> det_res;
  for (int i = 0; i < ctx.cfg.samples; ++i) {
    auto rng = ctx.stream(1, i);
    const VectorXd x = ct.eval(ct.sample_chart_point(rng)).value;
    det_res.push_back(std::abs(det2.value(Tdet * x)));
  }
  ctx.checks.push_back(make_check("clifford-to-det-variety", det_res, ctx.tol));

  const Immersion s2s2 = generalized_clifford(2, 2);
  const ScalarField pf2 = pf_variety(2);
  std::vector<double> pf_res;
  for (int i = 0; i < ctx.cfg.samples; ++i) {
    auto rng = ctx.stream(2, i);
    const VectorXd y = s2s2.eval(s2s2.sample_chart_point(rng)).value;
    pf_res.push_back(std::abs(pf2.value(Tpf * y)));
  }
  ctx.checks.push_back(make_check("s2xs2-to-pf-variety", pf_res, ctx.tol));
}

void scenario_pfaffian_identities(Ctx& ctx) {
  const std::vector<int> sizes = {2, 4, 6, 8};
  const int per_size = std::max(1, ctx.cfg.samples / 10);
  std::vector<double> square_det, congruence_id, fast_vs_comb, recon, orth;
  for (std::size_t si = 0; si < sizes.size(); ++si) {
    const int m = sizes[si];
    for (int i = 0; i < per_size; ++i) {
      auto rng = ctx.stream(1 + si, i);
      const MatrixXd A = antisymmetrize(gaussian_matrix(m, m, rng));
      const MatrixXd B = gaussian_matrix(m, m, rng);
      const double pfA = pfaffian_combinatorial(A);
      const double detA = determinant(A);
      square_det.push_back(rel(std::abs(pfA * pfA - detA), std::abs(detA)));
      const double lhs = pfaffian_combinatorial(antisymmetrize(B.transpose() * A * B));
      const double rhs = determinant(B) * pfA;
      congruence_id.push_back(rel(std::abs(lhs - rhs), std::abs(rhs)));
      fast_vs_comb.push_back(rel(std::abs(pfaffian_fast(A) - pfA), std::abs(pfA)));

      const SkewCanonicalForm form = skew_canonical_form(A);
      recon.push_back((form.reconstruct() - A).norm() / A.norm());
      orth.push_back((form.Q.transpose() * form.Q - MatrixXd::Identity(m, m))
                         .cwiseAbs()
                         .maxCoeff());
    }
  }
  ctx.checks.push_back(make_check("pf-squared-is-det", square_det, 1e-10));
  ctx.checks.push_back(make_check("pf-congruence-identity", congruence_id, 1e-8));
  ctx.checks.push_back(make_check("fast-vs-combinatorial", fast_vs_comb, 1e-9));
  ctx.checks.push_back(make_check("canonical-reconstruction", recon, 1e-10));
  ctx.checks.push_back(make_check("canonical-orthogonality", orth, 1e-12));
}

void scenario_nonminimal_control(Ctx& ctx) {
  const int n_pts = std::min(ctx.cfg.samples, 100);
  {
    const Immersion t = torus_with_radii(0.6);
    std::vector<double> res;
    for (int i = 0; i < n_pts; ++i) {
      auto rng = ctx.stream(1, i);
      res.push_back(sphere_minimality_residual(t, t.sample_chart_point(rng)));
    }
    ctx.checks.push_back(make_floor_check("torus-0.6-residual", res, 0.1));
  }
  {
    const Immersion s = small_sphere(0.6);
    std::vector<double> res;
    for (int i = 0; i < n_pts; ++i) {
      auto rng = ctx.stream(2, i);
      res.push_back(sphere_minimality_residual(s, s.sample_chart_point(rng)));
    }
    ctx.checks.push_back(make_floor_check("small-sphere-residual", res, 0.1));
  }
  {
    // f = |x|^2 - 1 in R^4: the round sphere is not a minimal cone
    ScalarField f;
    f.ambient_dim = 4;
    f.value = [](const VectorXd& x) { return x.squaredNorm() - 1.0; };
    f.gradient = [](const VectorXd& x) { return (2.0 * x).eval(); };
    f.hessian = [](const VectorXd& x) {
      return (2.0 * MatrixXd::Identity(x.size(), x.size())).eval();
    };
    std::vector<double> res;
    for (int i = 0; i < n_pts; ++i) {
      auto rng = ctx.stream(3, i);
      const VectorXd x = gaussian_vector(4, rng).normalized();
      res.push_back(level_residual(f, x));
    }
    ctx.checks.push_back(make_floor_check("sphere-field-residual", res, 1.0));
  }
}

double default_tol(const ScenarioConfig& cfg, int n) {
  const std::string& s = cfg.scenario;
  if (s == "product" || s == "clifford" || s == "generalized-clifford")
    return cfg.mode == "fd" ? 1e-4 : 1e-6;
  if (s == "det-cone") return n == 2 ? 1e-12 : 1e-8;
  if (s == "pfaffian-cone") return 1e-7;
  if (s == "helicoidal-clifford" || s == "helicoidal-det" ||
      s == "helicoidal-pfaffian")
    return 1e-10;
  if (s == "symmetry-crosscheck") return 1e-6;
  if (s == "congruence") return 1e-12;
  if (s == "pfaffian-identities") return 1e-8;
  if (s == "nonminimal-control") return 0.1;
  return 1e-6;
}

}  // namespace

SurfaceHandle clifford_torus_handle(int p) {
  const int half = p + 1;
  const double c = 1.0 / std::sqrt(2.0);
  const Immersion torus = generalized_clifford(p, p);
  SurfaceHandle h;
  h.ambient_dim = 2 * half;
  h.on_tol = 1e-10;
  h.membership = [half, c](const VectorXd& x) {
    return std::hypot(x.head(half).norm() - c, x.tail(half).norm() - c);
  };
  h.side = [half](const VectorXd& x) {
    return x.head(half).norm() - x.tail(half).norm();
  };
  h.sample_on = [torus](std::mt19937_64& rng) {
    return torus.eval(torus.sample_chart_point(rng)).value;
  };
  return h;
}

SurfaceHandle torus_handle(double r) {
  const double s = std::sqrt(1.0 - r * r);
  const Immersion torus = torus_with_radii(r);
  SurfaceHandle h;
  h.ambient_dim = 4;
  h.on_tol = 1e-10;
  h.membership = [r, s](const VectorXd& x) {
    return std::hypot(x.head(2).norm() - r, x.tail(2).norm() - s);
  };
  h.side = [r](const VectorXd& x) {
    return x.head(2).norm() / x.norm() - r;
  };
  h.sample_on = [torus](std::mt19937_64& rng) {
    return torus.eval(torus.sample_chart_point(rng)).value;
  };
  return h;
}

SurfaceHandle det_variety_handle(int n) {
  SurfaceHandle h;
  h.ambient_dim = n * n;
  h.on_tol = 1e-12;
  h.membership = [n](const VectorXd& x) {
    return std::abs(determinant(reshape_square(x, n)));
  };
  h.side = [n](const VectorXd& x) { return determinant(reshape_square(x, n)); };
  h.sample_on = [n](std::mt19937_64& rng) { return sample_det_variety(n, rng).x; };
  return h;
}

SurfaceHandle pf_variety_handle(int n) {
  SurfaceHandle h;
  h.ambient_dim = 2 * n * n - n;
  h.on_tol = 1e-12;
  h.membership = [](const VectorXd& x) {
    return std::abs(pfaffian_fast(skew_from_upper(x)));
  };
  h.side = [](const VectorXd& x) { return pfaffian_fast(skew_from_upper(x)); };
  h.sample_on = [n](std::mt19937_64& rng) { return sample_pf_variety(n, rng).x; };
  return h;
}

MatrixXd clifford_det_witness() {
  // diagonalization of x1^2 + x2^2 - x3^2 - x4^2 into the det quadric
  // u1 u4 - u2 u3; rows are the u coordinates
  const double c = 1.0 / std::sqrt(2.0);
  MatrixXd T(4, 4);
  T << c, 0, 0, c,
       0, c, c, 0,
       0, -c, c, 0,
       c, 0, 0, -c;
  return T;
}

MatrixXd clifford_pf_witness() {
  // diagonalization of sum(y_1..3^2) - sum(y_4..6^2) into the pf quadric
  // x1 x6 - x2 x5 + x3 x4
  const double c = 1.0 / std::sqrt(2.0);
  MatrixXd T = MatrixXd::Zero(6, 6);
  T(0, 0) = c; T(0, 3) = c;    // x1 = (y1 + y4)/sqrt2
  T(1, 1) = c; T(1, 4) = c;    // x2 = (y2 + y5)/sqrt2
  T(2, 2) = c; T(2, 5) = c;    // x3 = (y3 + y6)/sqrt2
  T(3, 2) = c; T(3, 5) = -c;   // x4 = (y3 - y6)/sqrt2
  T(4, 4) = c; T(4, 1) = -c;   // x5 = (y5 - y2)/sqrt2
  T(5, 0) = c; T(5, 3) = -c;   // x6 = (y1 - y4)/sqrt2
  return T;
}

const std::vector<ScenarioInfo>& scenario_catalog() {
  static const std::vector<ScenarioInfo> catalog = {
      {"product", "scaled products of minimal factors stay minimal in the sphere"},
      {"clifford", "the Clifford torus is minimal in S^3"},
      {"generalized-clifford", "S^p x S^q product torus with factors sqrt(p/(p+q)), sqrt(q/(p+q)) (--p, --q)"},
      {"det-cone", "zero-determinant matrices form a minimal hypercone (--n)"},
      {"pfaffian-cone", "zero-Pfaffian skew matrices form a minimal hypercone (--n)"},
      {"helicoidal-clifford", "block-swap reflection and its conjugates are helicoidal for the equal torus"},
      {"helicoidal-det", "null-vector reflection is helicoidal for the det variety (--n)"},
      {"helicoidal-pfaffian", "kernel-swap conjugation is helicoidal for the pf variety (--n)"},
      {"symmetry-crosscheck", "helicoidal points have vanishing minimality residual"},
      {"congruence", "orthogonal witnesses carry product tori onto the det / pf varieties"},
      {"pfaffian-identities", "pf^2 = det, pf(B^T A B) = det(B) pf(A), canonical form round-trip"},
      {"nonminimal-control", "non-minimal surfaces show large residuals (guards against trivial zeros)"},
  };
  return catalog;
}

ResidualReport run_scenario(const ScenarioConfig& config) {
  bool known = false;
  for (const auto& info : scenario_catalog())
    if (info.name == config.scenario) known = true;
  if (!known)
    throw ContractError("unknown scenario: " + config.scenario);
  if (config.samples < 1) throw ContractError("samples >= 1 required");
  if (config.tol && *config.tol <= 0.0) throw ContractError("tol must be positive");
  if (config.mode != "ad" && config.mode != "fd")
    throw ContractError("mode must be 'ad' or 'fd'");

  const std::string& s = config.scenario;
  const int n = config.n.value_or(s == "helicoidal-pfaffian" || s == "pfaffian-cone" ? 2 : 3);

  Ctx ctx;
  ctx.cfg = config;
  ctx.tol = config.tol.value_or(default_tol(config, n));

  if (s == "product") scenario_product(ctx);
  else if (s == "clifford") scenario_clifford_like(ctx, 1, 1);
  else if (s == "generalized-clifford") scenario_clifford_like(ctx, config.p, config.q);
  else if (s == "det-cone") scenario_det_cone(ctx, n);
  else if (s == "pfaffian-cone") scenario_pf_cone(ctx, n);
  else if (s == "helicoidal-clifford") scenario_helicoidal_clifford(ctx);
  else if (s == "helicoidal-det") scenario_helicoidal_det(ctx, n);
  else if (s == "helicoidal-pfaffian") scenario_helicoidal_pf(ctx, n);
  else if (s == "symmetry-crosscheck") scenario_crosscheck(ctx);
  else if (s == "congruence") scenario_congruence(ctx);
  else if (s == "pfaffian-identities") scenario_pfaffian_identities(ctx);
  else if (s == "nonminimal-control") scenario_nonminimal_control(ctx);

  ResidualReport report;
  report.scenario = s;
  report.seed = config.seed;
  report.samples = config.samples;
  report.tol = ctx.tol;
  report.mode = config.mode;
  report.timestamp = iso8601_now();
  report.checks = std::move(ctx.checks);
  report.finalize();
  return report;
}

}  // namespace minlab
