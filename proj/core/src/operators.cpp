#include "mis/operators.hpp"

#include <algorithm>
#include <vector>

#include "detail.hpp"

namespace mis {

namespace {

// For each member I of proper A, whether some member of proper B lies inside I.
std::vector<bool> has_member_inside(const Antichain& a, const Antichain& b) {
  std::vector<bool> out(a.size(), false);
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // First J with J.left >= I.left has the smallest right extreme among the
    // candidates.
    while (j < b.size() && b[j].left < a[i].left) ++j;
    out[i] = j < b.size() && b[j].right <= a[i].right;
  }
  return out;
}

// For each member I of proper A, whether some member of proper B contains I.
std::vector<bool> has_member_around(const Antichain& a, const Antichain& b) {
  std::vector<bool> out(a.size(), false);
  std::size_t j = 0;  // number of members of B with left <= I.left
  for (std::size_t i = 0; i < a.size(); ++i) {
    while (j < b.size() && b[j].left <= a[i].left) ++j;
    out[i] = j > 0 && b[j - 1].right >= a[i].right;
  }
  return out;
}

Antichain select(const Antichain& a, const std::vector<bool>& flags, bool keep) {
  std::vector<Interval> out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (flags[i] == keep) out.push_back(a[i]);
  }
  return Antichain::from_sorted(std::move(out));
}

// Appends a span whose left extreme is larger than every previous one; the
// previous span contains it exactly when both share the right extreme.
void push_span(std::vector<Interval>& out, Interval span) {
  if (!out.empty() && out.back().right == span.right) out.pop_back();
  out.push_back(span);
}

}  // namespace

std::string_view to_string(ContainmentMode mode) {
  switch (mode) {
    case ContainmentMode::containing: return "containing";
    case ContainmentMode::not_containing: return "not_containing";
    case ContainmentMode::contained_in: return "contained_in";
    case ContainmentMode::not_contained_in: return "not_contained_in";
  }
  return "?";
}

std::string_view to_string(StrictMode mode) {
  return mode == StrictMode::strictly_containing ? "strictly_containing"
                                                 : "not_strictly_containing";
}

bool leq(const Antichain& a, const Antichain& b) {
  if (b.is_top()) return true;
  if (a.is_top()) return false;
  std::size_t j = 0;
  for (const auto& iv : a) {
    while (j < b.size() && b[j].left < iv.left) ++j;
    if (j == b.size() || b[j].right > iv.right) return false;
  }
  return true;
}

Antichain join(const Antichain& a, const Antichain& b) {
  if (a.is_top() || b.is_top()) return Antichain::top();
  // Merge and minimize in one pass.
  std::vector<Interval> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    const bool take_a = j == b.end() || (i != a.end() && *i < *j);
    detail::push_minimal(out, take_a ? *i++ : *j++);
  }
  return Antichain::from_sorted(std::move(out));
}

Antichain meet(const Antichain& a, const Antichain& b) {
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  if (a.is_bottom() || b.is_bottom()) return {};

  // Every minimal span starts at the left extreme x of some member, and ends
  // at the smallest right extreme reachable using members starting at or after
  // x on both sides. That right extreme is nondecreasing in x.
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const Position x = std::min(a[i].left, b[j].left);
    push_span(out, {x, std::max(a[i].right, b[j].right)});
    if (a[i].left == x) ++i;
    if (b[j].left == x) ++j;
  }
  return Antichain::from_sorted(std::move(out));
}

Antichain pseudo_difference(const Antichain& a, const Antichain& b) {
  if (b.is_top()) return {};
  if (a.is_top()) return Antichain::top();
  if (b.is_bottom()) return a;
  return select(a, has_member_inside(a, b), false);
}

Antichain sym_difference(const Antichain& a, const Antichain& b) {
  return join(pseudo_difference(a, b), pseudo_difference(b, a));
}

Antichain intersect(const Antichain& a, const Antichain& b) {
  if (a.is_top() && b.is_top()) return Antichain::top();
  if (a.is_top() || b.is_top()) return {};
  std::vector<Interval> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Antichain::from_sorted(std::move(out));
}

Antichain filter_containment(const Antichain& a, const Antichain& b, ContainmentMode mode) {
  const bool positive =
      mode == ContainmentMode::containing || mode == ContainmentMode::contained_in;
  const bool inside =
      mode == ContainmentMode::containing || mode == ContainmentMode::not_containing;

  // With A = {∅}: ∅ contains only ∅, and is contained in every member of B.
  if (a.is_top()) {
    const bool witnessed = inside ? b.is_top() : !b.is_bottom();
    return witnessed == positive ? Antichain::top() : Antichain{};
  }
  // With B = {∅}: every nonempty I contains ∅, and none is contained in it.
  if (b.is_top()) {
    const bool witnessed = inside;
    return witnessed == positive ? a : Antichain{};
  }
  return select(a, inside ? has_member_inside(a, b) : has_member_around(a, b), positive);
}

Antichain strict_containment(const Antichain& a, const Antichain& b, StrictMode mode) {
  Antichain not_strict = pseudo_difference(a, pseudo_difference(b, a));
  if (mode == StrictMode::not_strictly_containing) return not_strict;
  return pseudo_difference(a, not_strict);
}

Antichain ordered_meet(const Antichain& a, const Antichain& b) {
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& iv : a) {
    while (j < b.size() && b[j].left <= iv.right) ++j;
    if (j == b.size()) break;
    push_span(out, {iv.left, b[j].right});
  }
  return Antichain::from_sorted(std::move(out));
}

Antichain block(const Antichain& a, const Antichain& b) {
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  std::vector<Interval> out;
  std::size_t j = 0;
  for (const auto& iv : a) {
    while (j < b.size() && b[j].left <= iv.right) ++j;
    if (j == b.size()) break;
    if (b[j].left == iv.right + 1) out.push_back({iv.left, b[j].right});
  }
  return Antichain::from_sorted(std::move(out));
}

}  // namespace mis
