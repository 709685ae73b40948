#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace minlab {

struct CheckResult {
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  int failures = 0;
  bool pass = false;
  std::vector<double> per_sample;  // raw residuals, for CSV export
};

struct ResidualReport {
  std::string scenario;
  std::uint64_t seed = 0;
  int samples = 0;
  double tol = 0.0;
  std::string mode;       // "ad" | "fd"
  std::string timestamp;  // the only field allowed to differ between runs
  std::vector<CheckResult> checks;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  int failures = 0;
  bool verdict = false;

  void finalize();  // aggregate check stats into the report totals

  // Fixed key order, floats with 17 significant digits.
  std::string to_json() const;

  // check,sample,residual rows.
  std::string to_csv() const;
};

std::string iso8601_now();

// to_json with the timestamp line removed, for determinism comparisons.
std::string strip_timestamp(const std::string& json);

}  // namespace minlab
