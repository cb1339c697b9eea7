#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mis/antichain.hpp"

namespace mis {

/// Largest n accepted by level_profile.
inline constexpr Position kLevelProfileMaxN = 11;
/// Largest n accepted by width by default.
inline constexpr Position kWidthMaxN = 9;

namespace detail {

template <class Visitor>
void enumerate_from(std::vector<Interval>& current, Position n, Position l, Position r,
                    Visitor& visit) {
  visit(std::span<const Interval>(current));
  for (Position i = l; i < n; ++i) {
    for (Position j = std::max(i, r); j < n; ++j) {
      current.push_back({i, j});
      enumerate_from(current, n, i + 1, j + 1, visit);
      current.pop_back();
    }
  }
}

}  // namespace detail

/// Visits every proper antichain over {0..n-1} (everything but the top) in the
/// recursion order of the constant-amortized-time generator: the current set
/// is emitted, then extended by each interval [i..j] that can follow it in
/// natural order. The visitor receives a view valid only during the call.
template <class Visitor>
void for_each_proper_antichain(Position n, Visitor&& visit) {
  std::vector<Interval> current;
  current.reserve(static_cast<std::size_t>(std::max<Position>(n, 0)));
  detail::enumerate_from(current, n, 0, 0, visit);
}

/// Every element of the lattice over {0..n-1}: the proper antichains in
/// generator order, followed by the top element.
void enumerate_all(Position n, const std::function<void(const Antichain&)>& emit);

/// enumerate_all collected into a vector.
std::vector<Antichain> all_antichains(Position n);

/// C(n+1) + 1, the number of elements over {0..n-1}. Throws
/// std::overflow_error when the value does not fit in 64 bits.
std::uint64_t cardinality(Position n);

/// Catalan number C(k); throws std::overflow_error past 64 bits.
std::uint64_t catalan(std::uint64_t k);

struct LevelProfile {
  Position n = 0;
  /// Number of elements of each rank, for ranks 0 .. 1 + n(n+1)/2.
  std::vector<std::uint64_t> counts_by_rank;

  std::uint64_t max_level() const;
  std::uint64_t total() const;
};

/// Histogram of ranks over the whole lattice. n <= kLevelProfileMaxN.
LevelProfile level_profile(Position n);

/// Exact size of a largest antichain of the lattice over {0..n-1}, from a
/// minimum chain cover (maximum bipartite matching on the strict order).
/// Throws std::length_error for n > max_n.
std::uint64_t width(Position n, Position max_n = kWidthMaxN);

}  // namespace mis
