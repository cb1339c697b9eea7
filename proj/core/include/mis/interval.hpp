#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace mis {

using Position = std::int64_t;

/// The totally ordered base set: either {0, ..., n-1} or the whole integer line.
class Universe {
public:
  static Universe bounded(Position n);
  static Universe unbounded() { return Universe{}; }

  bool is_bounded() const { return size_.has_value(); }
  /// Number of positions; only meaningful when bounded.
  Position size() const { return size_.value(); }
  bool contains(Position x) const { return !size_ || (x >= 0 && x < *size_); }

  friend bool operator==(const Universe&, const Universe&) = default;

private:
  Universe() = default;
  std::optional<Position> size_;
};

/// A nonempty finite closed interval [left..right].
struct Interval {
  Position left;
  Position right;

  constexpr Interval(Position l, Position r) : left{l}, right{r} {}
  /// The singleton interval [x..x].
  static constexpr Interval point(Position x) { return {x, x}; }

  constexpr Position length() const { return right - left + 1; }
  constexpr bool contains(const Interval& other) const {
    return left <= other.left && other.right <= right;
  }
  constexpr bool strictly_contains(const Interval& other) const {
    return contains(other) && *this != other;
  }
  constexpr bool overlaps(const Interval& other) const {
    return left <= other.right && other.left <= right;
  }

  friend constexpr bool operator==(const Interval&, const Interval&) = default;
  friend constexpr auto operator<=>(const Interval&, const Interval&) = default;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);
std::string to_string(const Interval& iv);

/// Checks left <= right; throws std::invalid_argument otherwise.
Interval make_interval(Position left, Position right);

/// An interval of the base set that may be infinite or empty: finite [l..r],
/// left ray (<-..r], right ray [l..->), the full line, or the empty set.
class ExtendedInterval {
public:
  enum class Kind { finite, left_ray, right_ray, full, empty };

  static ExtendedInterval finite(Position left, Position right);
  static ExtendedInterval finite(const Interval& iv) { return finite(iv.left, iv.right); }
  static ExtendedInterval left_ray(Position right) { return {Kind::left_ray, 0, right}; }
  static ExtendedInterval right_ray(Position left) { return {Kind::right_ray, left, 0}; }
  static ExtendedInterval full() { return {Kind::full, 0, 0}; }
  static ExtendedInterval empty() { return {Kind::empty, 0, 0}; }

  Kind kind() const { return kind_; }
  bool has_left() const { return kind_ == Kind::finite || kind_ == Kind::right_ray; }
  bool has_right() const { return kind_ == Kind::finite || kind_ == Kind::left_ray; }
  /// Left extreme; requires has_left().
  Position left() const;
  /// Right extreme; requires has_right().
  Position right() const;

  /// Set inclusion over the integer line.
  bool contains(const ExtendedInterval& other) const;
  bool contains(const Interval& iv) const;
  bool contains(Position x) const;

  /// Clamps to {0..n-1}; nullopt when the clamped set is empty.
  std::optional<Interval> clamp(Position n) const;

  friend bool operator==(const ExtendedInterval&, const ExtendedInterval&) = default;

private:
  ExtendedInterval(Kind k, Position l, Position r) : kind_{k}, left_{l}, right_{r} {}

  Kind kind_;
  Position left_;
  Position right_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedInterval& iv);
std::string to_string(const ExtendedInterval& iv);

}  // namespace mis
