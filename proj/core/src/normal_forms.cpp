#include "mis/normal_forms.hpp"

#include <sstream>
#include <stdexcept>

namespace mis {

namespace {

void append(std::vector<Interval>& out, const Antichain& piece) {
  out.insert(out.end(), piece.begin(), piece.end());
}

void require_fits(const Antichain& a, const Universe& u) {
  if (u.is_bounded() && !a.fits(u.size())) {
    throw std::out_of_range("antichain " + to_string(a) + " does not fit in {0.." +
                            std::to_string(u.size() - 1) + "}");
  }
}

GeneralAntichain finish(GeneralAntichain g, const Universe& u) {
  if (!u.is_bounded()) return g;
  return materialize(g, u.size());
}

}  // namespace

// GeneralAntichain

GeneralAntichain::GeneralAntichain(Antichain finite) : core_{std::move(finite)} {}

GeneralAntichain GeneralAntichain::make(std::optional<Position> low, Antichain core,
                                        std::optional<Position> high) {
  if (core.is_top()) {
    if (low || high) throw std::invalid_argument("top element cannot carry rays");
    return GeneralAntichain{std::move(core)};
  }
  auto first = core.begin();
  auto last = core.end();
  if (low) {
    while (first != last && *first == Interval::point(*low + 1)) {
      ++*low;
      ++first;
    }
    if (first != last && first->left <= *low) {
      throw std::invalid_argument("core interval overlaps the low ray");
    }
  }
  if (high) {
    while (first != last && *(last - 1) == Interval::point(*high - 1)) {
      --*high;
      --last;
    }
    if (first != last && (last - 1)->right >= *high) {
      throw std::invalid_argument("core interval overlaps the high ray");
    }
  }
  if (low && high && *low + 1 >= *high) {
    throw std::invalid_argument("rays cover every position; no finite description");
  }
  GeneralAntichain g;
  g.low_ = low;
  g.high_ = high;
  g.core_ = Antichain::from_sorted(std::vector<Interval>(first, last));
  return g;
}

Antichain materialize(const GeneralAntichain& g, Position n) {
  if (g.is_top()) return Antichain::top();
  std::vector<Interval> out;
  if (g.low_ray()) {
    for (Position x = 0; x <= std::min(*g.low_ray(), n - 1); ++x) out.push_back(Interval::point(x));
  }
  for (const auto& iv : g.core()) {
    if (iv.left >= 0 && iv.right < n) out.push_back(iv);
  }
  if (g.high_ray()) {
    for (Position x = std::max<Position>(*g.high_ray(), 0); x < n; ++x) {
      out.push_back(Interval::point(x));
    }
  }
  return Antichain::from_sorted(std::move(out));
}

Antichain materialize(const GeneralAntichain& g, const Universe& u) {
  if (u.is_bounded()) return materialize(g, u.size());
  if (!g.is_finite()) throw std::invalid_argument("infinite antichain over the unbounded universe");
  return g.core();
}

std::ostream& operator<<(std::ostream& os, const GeneralAntichain& g) {
  if (g.is_finite()) return os << g.core();
  os << '{';
  const char* sep = "";
  if (g.low_ray()) {
    os << "…[x] for x ≤ " << *g.low_ray();
    sep = ", ";
  }
  for (const auto& iv : g.core()) {
    os << sep << iv;
    sep = ", ";
  }
  if (g.high_ray()) os << sep << "[x] for x ≥ " << *g.high_ray() << "…";
  return os << '}';
}

std::string to_string(const GeneralAntichain& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

// CritSet

CritSet CritSet::make(std::vector<ExtendedInterval> elements) {
  using Kind = ExtendedInterval::Kind;
  for (const auto& e : elements) {
    if ((e.kind() == Kind::full || e.kind() == Kind::empty) && elements.size() != 1) {
      throw std::invalid_argument("the full line or the empty interval must stand alone");
    }
  }
  for (std::size_t i = 1; i < elements.size(); ++i) {
    const auto& prev = elements[i - 1];
    const auto& next = elements[i];
    if (!prev.has_right() || !next.has_left()) {
      throw std::invalid_argument("rays out of natural order");
    }
    if ((prev.has_left() && prev.left() >= next.left()) ||
        (next.has_right() && prev.right() >= next.right())) {
      throw std::invalid_argument("intervals are not an antichain in natural order");
    }
  }
  CritSet s;
  s.elements_ = std::move(elements);
  return s;
}

std::vector<std::optional<Interval>> CritSet::clamp(Position n) const {
  std::vector<std::optional<Interval>> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.clamp(n));
  return out;
}

std::ostream& operator<<(std::ostream& os, const CritSet& s) {
  os << '{';
  const char* sep = "";
  for (const auto& e : s) {
    os << sep << e;
    sep = ", ";
  }
  return os << '}';
}

std::string to_string(const CritSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

// Operations

GeneralAntichain tilde(const ExtendedInterval& iv, const Universe& u) {
  using Kind = ExtendedInterval::Kind;
  switch (iv.kind()) {
    case Kind::full:
      return {};
    case Kind::empty:
      if (!u.is_bounded()) {
        throw std::invalid_argument("~∅ (all singletons) has no finite description when unbounded");
      }
      return Antichain::all_points(u.size());
    case Kind::finite:
      return finish(GeneralAntichain::make(iv.left() - 1, {}, iv.right() + 1), u);
    case Kind::left_ray:
      return finish(GeneralAntichain::make(std::nullopt, {}, iv.right() + 1), u);
    case Kind::right_ray:
      return finish(GeneralAntichain::make(iv.left() - 1, {}, std::nullopt), u);
  }
  throw std::logic_error("unreachable");
}

Antichain ep(Position l, Position r) {
  if (l < r) return Antichain::from_sorted({{l, r}});
  std::vector<Interval> points;
  points.reserve(static_cast<std::size_t>(l - r + 1));
  for (Position x = r; x <= l; ++x) points.push_back(Interval::point(x));
  return Antichain::from_sorted(std::move(points));
}

CritSet critical_intervals(const Antichain& a, const Universe& u) {
  require_fits(a, u);
  if (a.is_top()) return {};
  if (a.is_bottom()) return CritSet::make({ExtendedInterval::full()});
  if (u.is_bounded() && a == Antichain::all_points(u.size())) {
    return CritSet::make({ExtendedInterval::empty()});
  }

  std::vector<ExtendedInterval> out;
  out.reserve(a.size() + 1);
  const Position first_right = a.front().right;
  if (!u.is_bounded() || first_right - 1 >= 0) {
    out.push_back(ExtendedInterval::left_ray(first_right - 1));
  }
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    const Position lo = a[i].left + 1;
    const Position hi = a[i + 1].right - 1;
    if (lo <= hi) out.push_back(ExtendedInterval::finite(lo, hi));
  }
  const Position last_left = a.back().left;
  if (!u.is_bounded() || last_left + 1 <= u.size() - 1) {
    out.push_back(ExtendedInterval::right_ray(last_left + 1));
  }
  return CritSet::make(std::move(out));
}

GeneralAntichain meet_of_irreducibles(const CritSet& s, const Universe& u) {
  using Kind = ExtendedInterval::Kind;
  if (s.empty()) return Antichain::top();
  if (s[0].kind() == Kind::empty) return tilde(s[0], u);
  if (s[0].kind() == Kind::full) return {};

  std::optional<Position> low;
  std::optional<Position> high;
  if (s[0].has_left()) low = s[0].left() - 1;
  if (s[s.size() - 1].has_right()) high = s[s.size() - 1].right() + 1;

  std::vector<Interval> core;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    append(core, ep(s[k + 1].left() - 1, s[k].right() + 1));
  }
  return finish(GeneralAntichain::make(low, Antichain::from_sorted(std::move(core)), high), u);
}

GeneralAntichain relative_pseudo_complement(const Antichain& a, const Antichain& b,
                                            const Universe& u) {
  require_fits(a, u);
  require_fits(b, u);
  if (a.is_top()) return b;
  if (b.is_top() || a.is_bottom()) return Antichain::top();
  if (b.is_bottom()) return {};

  const std::size_t m = b.size();
  // {(←..r₀−1]} <= A and {[ℓ_{m−1}+1..→)} <= A.
  const bool left_cond = a.front().right <= b[0].right - 1;
  const bool right_cond = a.back().left >= b[m - 1].left + 1;

  // Indices i in (0, m) whose gap [ℓ_{i−1}+1..r_i−1] contains a member of A.
  std::vector<std::size_t> t;
  std::size_t p = 0;
  for (std::size_t i = 1; i < m; ++i) {
    const Position lo = b[i - 1].left + 1;
    while (p < a.size() && a[p].left < lo) ++p;
    if (p < a.size() && a[p].right <= b[i].right - 1) t.push_back(i);
  }

  std::optional<Position> low;
  std::optional<Position> high;
  std::vector<Interval> core;
  if (t.empty()) {
    if (left_cond && right_cond) {
      append(core, ep(b[m - 1].left, b[0].right));
    } else if (right_cond) {
      low = b[m - 1].left;
    } else if (left_cond) {
      high = b[0].right;
    } else {
      return Antichain::top();
    }
  } else {
    const std::size_t t_min = t.front();
    const std::size_t t_max = t.back();
    if (left_cond) {
      append(core, ep(b[t_min - 1].left, b[0].right));
    } else {
      low = b[t_min - 1].left;
    }
    for (std::size_t k = 1; k < t.size(); ++k) {
      append(core, ep(b[t[k] - 1].left, b[t[k - 1]].right));
    }
    if (right_cond) {
      append(core, ep(b[m - 1].left, b[t_max].right));
    } else {
      high = b[t_max].right;
    }
  }
  return finish(GeneralAntichain::make(low, Antichain::from_sorted(std::move(core)), high), u);
}

}  // namespace mis
