#include "mis/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "matching.hpp"
#include "mis/operators.hpp"
#include "mis/rank.hpp"

namespace mis {

void enumerate_all(Position n, const std::function<void(const Antichain&)>& emit) {
  if (n < 0) throw std::invalid_argument("universe size must be non-negative");
  for_each_proper_antichain(n, [&](std::span<const Interval> intervals) {
    emit(Antichain::from_sorted({intervals.begin(), intervals.end()}));
  });
  emit(Antichain::top());
}

std::vector<Antichain> all_antichains(Position n) {
  std::vector<Antichain> out;
  enumerate_all(n, [&](const Antichain& a) { out.push_back(a); });
  return out;
}

std::uint64_t catalan(std::uint64_t k) {
  // C(i+1) = C(i) * 2(2i+1) / (i+2), exact at every step.
  __extension__ using Wide = unsigned __int128;
  Wide c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * (2 * (2 * i + 1)) / (i + 2);
    if (c > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("Catalan number C(" + std::to_string(k) +
                                ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(c);
}

std::uint64_t cardinality(Position n) {
  if (n < 0) throw std::invalid_argument("universe size must be non-negative");
  const std::uint64_t c = catalan(static_cast<std::uint64_t>(n) + 1);
  if (c == std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("cardinality exceeds 64 bits");
  }
  return c + 1;
}

std::uint64_t LevelProfile::max_level() const {
  return counts_by_rank.empty() ? 0 : *std::max_element(counts_by_rank.begin(), counts_by_rank.end());
}

std::uint64_t LevelProfile::total() const {
  return std::accumulate(counts_by_rank.begin(), counts_by_rank.end(), std::uint64_t{0});
}

LevelProfile level_profile(Position n) {
  if (n < 1 || n > kLevelProfileMaxN) {
    throw std::length_error("level_profile supports 1 <= n <= " +
                            std::to_string(kLevelProfileMaxN));
  }
  LevelProfile profile;
  profile.n = n;
  profile.counts_by_rank.assign(top_rank(n) + 1, 0);
  for_each_proper_antichain(n, [&](std::span<const Interval> intervals) {
    // Telescoping rank formula, inlined to avoid materializing each element.
    if (intervals.empty()) {
      ++profile.counts_by_rank[0];
      return;
    }
    std::uint64_t r = static_cast<std::uint64_t>((1 + intervals[0].left) * (n - intervals[0].right));
    for (std::size_t i = 1; i < intervals.size(); ++i) {
      r += static_cast<std::uint64_t>((intervals[i].left - intervals[i - 1].left) *
                                      (n - intervals[i].right));
    }
    ++profile.counts_by_rank[r];
  });
  ++profile.counts_by_rank.back();
  return profile;
}

std::uint64_t width(Position n, Position max_n) {
  if (n < 0) throw std::invalid_argument("universe size must be non-negative");
  if (n > max_n) {
    throw std::length_error("exact width is limited to n <= " + std::to_string(max_n));
  }
  const std::vector<Antichain> elements = all_antichains(n);
  const std::size_t size = elements.size();

  // Dilworth: a minimum chain cover of a finite order has |P| - |M| chains,
  // where M is a maximum matching of {x -> y : x < y}.
  std::vector<std::vector<detail::BipartiteMatcher::Vertex>> adjacency(size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      if (x != y && leq(elements[x], elements[y])) {
        adjacency[x].push_back(static_cast<detail::BipartiteMatcher::Vertex>(y));
      }
    }
  }
  detail::BipartiteMatcher matcher(std::move(adjacency), size);
  return size - matcher.solve();
}

}  // namespace mis
