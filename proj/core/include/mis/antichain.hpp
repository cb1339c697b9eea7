#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mis/interval.hpp"

namespace mis {

/// An element of the lattice of antichains of finite intervals.
///
/// Either the top element {∅}, or a finite set of pairwise
/// inclusion-incomparable intervals kept in natural order: left extremes
/// strictly increasing, and therefore right extremes strictly increasing too.
/// The empty proper antichain is the bottom element.
///
/// Values are immutable once built.
class Antichain {
public:
  /// The bottom element 0.
  Antichain() = default;

  static Antichain bottom() { return {}; }
  static Antichain top();
  /// Inclusion-minimal members of `intervals`, in natural order.
  static Antichain normalize(std::span<const Interval> intervals);
  static Antichain normalize(std::initializer_list<Interval> intervals) {
    return normalize(std::span<const Interval>(intervals.begin(), intervals.size()));
  }
  /// Adopts an already-normal sequence. Throws std::invalid_argument if the
  /// sequence is not strictly increasing in both extremes.
  static Antichain from_sorted(std::vector<Interval> intervals);
  /// {[0..0], ..., [n-1..n-1]}, the unique coatom of the bounded lattice.
  static Antichain all_points(Position n);

  bool is_top() const { return top_; }
  bool is_bottom() const { return !top_ && intervals_.empty(); }
  bool is_proper() const { return !top_; }

  /// Members in natural order; empty for both bottom and top.
  std::span<const Interval> intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](std::size_t i) const { return intervals_[i]; }
  auto begin() const { return intervals_.begin(); }
  auto end() const { return intervals_.end(); }
  const Interval& front() const { return intervals_.front(); }
  const Interval& back() const { return intervals_.back(); }

  bool contains(const Interval& iv) const;
  /// Whether every member lies within {0..n-1}.
  bool fits(Position n) const;

  std::size_t hash() const;

  friend bool operator==(const Antichain&, const Antichain&) = default;

private:
  bool top_ = false;
  std::vector<Interval> intervals_;
};

/// True when the sequence is strictly increasing in both extremes.
bool is_normal_form(std::span<const Interval> intervals);

/// Renders as "0", "{∅}" or "{[l..r], ...}".
std::ostream& operator<<(std::ostream& os, const Antichain& a);
std::string to_string(const Antichain& a);

}  // namespace mis

template <>
struct std::hash<mis::Antichain> {
  std::size_t operator()(const mis::Antichain& a) const noexcept { return a.hash(); }
};
