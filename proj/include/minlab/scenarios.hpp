#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minlab/report.hpp"
#include "minlab/symmetry.hpp"

namespace minlab {

struct ScenarioConfig {
  std::string scenario;
  std::uint64_t seed = 42;
  int samples = 500;
  std::optional<double> tol;  // scenario-specific default when unset
  std::string mode = "ad";    // "ad" | "fd"
  std::optional<int> n;       // det-cone / pfaffian-cone size
  int p = 1, q = 1;           // generalized Clifford factors
};

struct ScenarioInfo {
  std::string name;
  std::string summary;
};

const std::vector<ScenarioInfo>& scenario_catalog();

// Executes one catalog scenario deterministically; throws ContractError for
// unknown names or bad parameters, SamplingError on sampler exhaustion.
ResidualReport run_scenario(const ScenarioConfig& config);

// Shared surface handles (also used by the test suites).
SurfaceHandle clifford_torus_handle(int p);
SurfaceHandle torus_handle(double r);  // S^1(r) x S^1(sqrt(1-r^2)) in S^3
SurfaceHandle det_variety_handle(int n);
SurfaceHandle pf_variety_handle(int n);

// Orthogonal congruence witnesses: the torus chart goes onto the det / pf
// variety slice of the sphere.
Eigen::MatrixXd clifford_det_witness();  // 4 x 4, Clifford torus -> {det = 0}
Eigen::MatrixXd clifford_pf_witness();   // 6 x 6, S^2 x S^2 -> {pf = 0}

}  // namespace minlab
