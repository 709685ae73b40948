#pragma once

#include <stdexcept>
#include <string>

namespace minlab {

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Violated precondition of a documented operation contract.
struct ContractError : std::invalid_argument {
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotSingularError : std::domain_error {
  explicit NotSingularError(const std::string& what) : std::domain_error(what) {}
};

// Point too close to the singular locus (corank >= 2, rank < 2n-2, ...).
struct NonRegularPointError : std::domain_error {
  explicit NonRegularPointError(const std::string& what) : std::domain_error(what) {}
};

struct SamplingError : std::runtime_error {
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minlab
