#include "mis/antichain.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "detail.hpp"

namespace mis {

Antichain Antichain::top() {
  Antichain a;
  a.top_ = true;
  return a;
}

Antichain Antichain::normalize(std::span<const Interval> intervals) {
  std::vector<Interval> sorted(intervals.begin(), intervals.end());
  std::sort(sorted.begin(), sorted.end());
  Antichain a;
  a.intervals_ = detail::minimize_sorted(sorted);
  return a;
}

Antichain Antichain::from_sorted(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) make_interval(iv.left, iv.right);
  if (!is_normal_form(intervals)) {
    throw std::invalid_argument("intervals are not an antichain in natural order");
  }
  Antichain a;
  a.intervals_ = std::move(intervals);
  return a;
}

Antichain Antichain::all_points(Position n) {
  Antichain a;
  a.intervals_.reserve(static_cast<std::size_t>(std::max<Position>(n, 0)));
  for (Position x = 0; x < n; ++x) a.intervals_.push_back(Interval::point(x));
  return a;
}

bool Antichain::contains(const Interval& iv) const {
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), iv);
  return it != intervals_.end() && *it == iv;
}

bool Antichain::fits(Position n) const {
  return intervals_.empty() || (intervals_.front().left >= 0 && intervals_.back().right < n);
}

std::size_t Antichain::hash() const {
  std::size_t h = top_ ? 0x9e3779b97f4a7c15ULL : 0xcbf29ce484222325ULL;
  for (const auto& iv : intervals_) {
    h ^= std::hash<Position>{}(iv.left) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<Position>{}(iv.right) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool is_normal_form(std::span<const Interval> intervals) {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].left > intervals[i].right) return false;
    if (i > 0 && (intervals[i - 1].left >= intervals[i].left ||
                  intervals[i - 1].right >= intervals[i].right)) {
      return false;
    }
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Antichain& a) {
  if (a.is_top()) return os << "{∅}";
  if (a.is_bottom()) return os << '0';
  os << '{';
  const char* sep = "";
  for (const auto& iv : a) {
    os << sep << iv;
    sep = ", ";
  }
  return os << '}';
}

std::string to_string(const Antichain& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

}  // namespace mis
