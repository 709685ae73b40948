#include "minlab/report.hpp"

#include <cstdio>
#include <ctime>
#include <sstream>

namespace minlab {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

void ResidualReport::finalize() {
  max_residual = 0.0;
  mean_residual = 0.0;
  failures = 0;
  verdict = true;
  for (const auto& c : checks) {
    max_residual = std::max(max_residual, c.max_residual);
    mean_residual += c.mean_residual;
    failures += c.failures;
    verdict = verdict && c.pass;
  }
  if (!checks.empty()) mean_residual /= static_cast<double>(checks.size());
}

std::string ResidualReport::to_json() const {
  std::ostringstream out;
  out << "{\n";
  out << "  \"scenario\": \"" << json_escape(scenario) << "\",\n";
  out << "  \"seed\": " << seed << ",\n";
  out << "  \"samples\": " << samples << ",\n";
  out << "  \"tol\": " << fmt_double(tol) << ",\n";
  out << "  \"mode\": \"" << json_escape(mode) << "\",\n";
  out << "  \"timestamp\": \"" << json_escape(timestamp) << "\",\n";
  out << "  \"checks\": [\n";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    out << "    {\"name\": \"" << json_escape(c.name) << "\", "
        << "\"samples\": " << c.samples << ", "
        << "\"max_residual\": " << fmt_double(c.max_residual) << ", "
        << "\"mean_residual\": " << fmt_double(c.mean_residual) << ", "
        << "\"failures\": " << c.failures << ", "
        << "\"pass\": " << (c.pass ? "true" : "false") << "}"
        << (i + 1 < checks.size() ? "," : "") << "\n";
  }
  out << "  ],\n";
  out << "  \"max_residual\": " << fmt_double(max_residual) << ",\n";
  out << "  \"mean_residual\": " << fmt_double(mean_residual) << ",\n";
  out << "  \"failures\": " << failures << ",\n";
  out << "  \"verdict\": \"" << (verdict ? "pass" : "fail") << "\"\n";
  out << "}\n";
  return out.str();
}

std::string ResidualReport::to_csv() const {
  std::ostringstream out;
  out << "check,sample,residual\n";
  for (const auto& c : checks)
    for (std::size_t i = 0; i < c.per_sample.size(); ++i)
      out << c.name << "," << i << "," << fmt_double(c.per_sample[i]) << "\n";
  return out.str();
}

std::string iso8601_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string strip_timestamp(const std::string& json) {
  std::string out;
  std::istringstream in(json);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("\"timestamp\"") != std::string::npos) continue;
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace minlab
