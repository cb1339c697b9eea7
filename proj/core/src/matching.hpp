#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace mis::detail {

/// Maximum cardinality matching in a bipartite graph given as adjacency lists
/// from left vertices to right vertices (Hopcroft-Karp, O(E sqrt V)).
class BipartiteMatcher {
public:
  using Vertex = std::uint32_t;

  BipartiteMatcher(std::vector<std::vector<Vertex>> adjacency, std::size_t right_size)
      : adj_(std::move(adjacency)),
        match_left_(adj_.size(), kFree),
        match_right_(right_size, kFree),
        dist_(adj_.size()) {}

  std::size_t solve() {
    std::size_t matched = 0;
    while (layer()) {
      for (Vertex u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kFree && augment(u)) ++matched;
      }
    }
    return matched;
  }

private:
  static constexpr Vertex kFree = std::numeric_limits<Vertex>::max();
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  bool layer() {
    std::queue<Vertex> queue;
    for (Vertex u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        queue.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (Vertex v : adj_[u]) {
        const Vertex w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push(w);
        }
      }
    }
    return found;
  }

  bool augment(Vertex u) {
    for (Vertex v : adj_[u]) {
      const Vertex w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && augment(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> match_left_;
  std::vector<Vertex> match_right_;
  std::vector<std::uint32_t> dist_;
};

}  // namespace mis::detail
