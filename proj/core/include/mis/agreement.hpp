#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mis/interval.hpp"

namespace mis {

/// Operators whose closed forms can be checked against the oracle.
enum class CheckedOp { leq, join, meet, minus, implies, crit, rank };

std::string_view to_string(CheckedOp op);
/// Parses an operator name as printed by to_string.
std::optional<CheckedOp> parse_checked_op(std::string_view name);
std::vector<CheckedOp> all_checked_ops();

struct CheckOptions {
  Position n = 4;
  std::vector<CheckedOp> ops = all_checked_ops();
  /// Random pairs to draw; nullopt checks every pair (every element for the
  /// unary operators).
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0x5eed;
};

struct OpReport {
  CheckedOp op;
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  /// Description of the first disagreement, empty when there is none.
  std::string first_mismatch;

  bool passed() const { return mismatches == 0; }
};

/// Runs closed form and oracle side by side over the lattice on {0..n-1}.
std::vector<OpReport> check_agreement(const CheckOptions& options);

}  // namespace mis
