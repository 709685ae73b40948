// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "minlab/parametric.hpp"
#include "minlab/rng.hpp"
#include "minlab/scenarios.hpp"

using namespace minlab;

namespace {

int g_failures = 0;

void report_line(const std::string& name, bool pass) {
  std::printf("[%s] %s\n", pass ? "PASS" : "FAIL", name.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

ResidualReport run(const std::string& scenario, int samples,
                   std::optional<int> n = std::nullopt) {
  ScenarioConfig cfg;
  cfg.scenario = scenario;
  cfg.seed = 42;
  cfg.samples = samples;
  cfg.n = n;
  return run_scenario(cfg);
}

// all checks whose name matches the predicate pass (and at least one matched)
bool checks_pass(const ResidualReport& rep,
                 const std::function<bool(const std::string&)>& match) {
  bool any = false, ok = true;
  for (const auto& c : rep.checks)
    if (match(c.name)) {
      any = true;
      ok = ok && c.pass;
    }
  return any && ok;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// maximum relative deviation between exact and finite-difference jets
double jet_deviation(const Immersion& imm, int points, std::uint64_t seed) {
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    auto rng = rng_stream(seed, i);
    const VectorXd phi = imm.sample_chart_point(rng);
    const ImmersionJet exact = imm.eval(phi);
    const ImmersionJet fd = finite_difference_jet(imm, phi);
    worst = std::max(worst, (exact.jacobian - fd.jacobian).cwiseAbs().maxCoeff() /
                                std::max(1.0, exact.jacobian.cwiseAbs().maxCoeff()));
    for (int k = 0; k < imm.ambient_dim; ++k) {
      const double scale = std::max(1.0, exact.hessian[k].cwiseAbs().maxCoeff());
      worst = std::max(
          worst, (exact.hessian[k] - fd.hessian[k]).cwiseAbs().maxCoeff() / scale);
    }
  }
  return worst;
}

}  // namespace

int main() {
  // products of minimal sphere factors stay minimal; metric laws hold
  const ResidualReport product = run("product", 100);
  report_line("product-minimality-residual",
              checks_pass(product, [](const std::string& n) {
                return ends_with(n, "-residual");
              }));
  report_line("product-metric-determinant-law",
              checks_pass(product, [](const std::string& n) {
                return ends_with(n, "-block-metric") || ends_with(n, "-metric-det");
              }));

  // non-minimal controls must show large residuals
  report_line("negative-controls", run("nonminimal-control", 100).verdict);

  // determinant hypercone: exact zero for n = 2, tight bound for n = 3, 4
  bool det_ok = true;
  for (int n : {2, 3, 4}) det_ok = det_ok && run("det-cone", 1000, n).verdict;
  report_line("det-cone-level-residual", det_ok);

  // Pfaffian hypercone, including the sampler acceptance-rate floor
  bool pf_ok = true;
  for (int n : {2, 3}) pf_ok = pf_ok && run("pfaffian-cone", 500, n).verdict;
  report_line("pf-cone-level-residual", pf_ok);

  // algebraic Pfaffian identities and the canonical form, 200 pairs per size
  const ResidualReport ids = run("pfaffian-identities", 2000);
  report_line("pfaffian-identities",
              checks_pass(ids, [](const std::string& n) {
                return n == "pf-squared-is-det" || n == "pf-congruence-identity" ||
                       n == "fast-vs-combinatorial";
              }));
  report_line("skew-canonical-form",
              checks_pass(ids, [](const std::string& n) {
                return n == "canonical-reconstruction" ||
                       n == "canonical-orthogonality";
              }));

  // block-swap reflection and its conjugates on the equal tori
  report_line("helicoidal-clifford", run("helicoidal-clifford", 200).verdict);

  // pointwise helicoidal constructions on both varieties
  report_line("helicoidal-det", run("helicoidal-det", 200).verdict);
  report_line("helicoidal-pfaffian", run("helicoidal-pfaffian", 200).verdict);

  // wherever a helicoidal isometry is verified, minimality holds too
  report_line("symmetry-curvature-crosscheck",
              run("symmetry-crosscheck", 200).verdict);

  // orthogonal congruence witnesses onto the det / pf varieties
  report_line("congruence-witnesses", run("congruence", 500).verdict);

  // engine cross-validation: AD vs FD jets, and field derivative self-checks
  bool engines_ok = true;
  engines_ok = engines_ok && jet_deviation(great_sphere(2), 50, 1) <= 1e-5;
  engines_ok = engines_ok && jet_deviation(great_sphere(3), 50, 2) <= 1e-5;
  engines_ok = engines_ok && jet_deviation(generalized_clifford(1, 1), 50, 3) <= 1e-5;
  engines_ok = engines_ok && jet_deviation(generalized_clifford(2, 2), 50, 4) <= 1e-5;
  engines_ok = engines_ok && jet_deviation(torus_with_radii(0.6), 50, 5) <= 1e-5;
  const ResidualReport det3 = run("det-cone", 10, 3);
  const ResidualReport pf2 = run("pfaffian-cone", 10, 2);
  for (const ResidualReport* rep : {&det3, &pf2})
    engines_ok = engines_ok && checks_pass(*rep, [](const std::string& n) {
                   return n == "euler-identity" || n == "gradient-fd" ||
                          n == "hessian-fd";
                 });
  report_line("engine-cross-validation", engines_ok);

  // byte-identical reports modulo the timestamp
  ScenarioConfig cfg;
  cfg.scenario = "clifford";
  cfg.samples = 50;
  cfg.seed = 7;
  const std::string a = strip_timestamp(run_scenario(cfg).to_json());
  const std::string b = strip_timestamp(run_scenario(cfg).to_json());
  report_line("report-determinism", !a.empty() && a == b);

  std::printf("%d/13 criteria passed\n", 13 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
