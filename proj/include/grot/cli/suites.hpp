#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grot/cli/report.hpp"
#include "grot/virtual_rep.hpp"

namespace grot::cli {

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::optional<int> max_degree;  // suite default when absent
  // When set, every VirtualRep computed by the suite is appended here.
  std::vector<VirtualRep>* emitted = nullptr;
};

const std::vector<std::string>& suite_names();
int default_max_degree(std::string_view suite);

// Exponent windows for exhaustive enumeration.
inline constexpr int kWindowF = 3;  // F side: exponents in [0, 3]
inline constexpr int kWindowD = 5;  // D side: exponents in [0, 5]

// Throws DomainError for an unknown suite name, or when the scenario lacks
// what the suite needs (an inner-form family for the transfer suites).
std::vector<CheckLine> run_suite(std::string_view name, const AlgebraContext& ctx,
                                 const SuiteOptions& opts = {});

}  // namespace grot::cli
