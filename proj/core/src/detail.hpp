#pragma once

#include <span>
#include <vector>

#include "mis/interval.hpp"

namespace mis::detail {

/// Inclusion-minimal members of a sequence sorted lexicographically by
/// (left, right). Linear time.
inline void push_minimal(std::vector<Interval>& out, const Interval& iv) {
  if (!out.empty() && out.back().left == iv.left) return;  // out.back() ⊆ iv
  while (!out.empty() && out.back().right >= iv.right) out.pop_back();
  out.push_back(iv);
}

inline std::vector<Interval> minimize_sorted(std::span<const Interval> sorted) {
  std::vector<Interval> out;
  out.reserve(sorted.size());
  for (const auto& iv : sorted) push_minimal(out, iv);
  return out;
}

}  // namespace mis::detail
