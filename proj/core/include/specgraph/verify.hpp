#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace specgraph {

enum class Check { prop1, prop2a, prop2b, prop3, prop4, bipartite_bound, classical, vertex_add };

std::string_view check_name(Check c) noexcept;
/// Accepts the names printed by check_name ("prop2a", "bipartite-bound", ...).
std::optional<Check> parse_check(std::string_view name) noexcept;

struct CheckResult {
  Check check = Check::prop1;
  std::size_t order = 0;
  bool passed = false;
  std::uint64_t cases = 0;    // graphs, partitions or family members examined
  std::uint64_t skipped = 0;  // census graphs the assertion does not apply to
  std::optional<std::string> counterexample;  // graph6 of the first failure
  std::string detail;
};

/// Runs one assertion suite at order m. Census-based checks read the built-in
/// enumeration (m <= 7) or `file`. prop1 covers every partition of m with at
/// least two parts and the one-positive-eigenvalue characterisation over the
/// census; prop3 and prop4 cover K_{n,n} -/+ e for 2 <= n <= m.
CheckResult run_check(Check check, std::size_t m,
                      const std::optional<std::filesystem::path>& file = std::nullopt);

}  // namespace specgraph
