#include "mis/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mis {

Universe Universe::bounded(Position n) {
  if (n < 1) throw std::invalid_argument("bounded universe needs at least one position");
  Universe u;
  u.size_ = n;
  return u;
}

Interval make_interval(Position left, Position right) {
  if (left > right) {
    throw std::invalid_argument("interval [" + std::to_string(left) + ".." +
                                std::to_string(right) + "] is empty");
  }
  return {left, right};
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) {
  return os << '[' << iv.left << ".." << iv.right << ']';
}

std::string to_string(const Interval& iv) {
  std::ostringstream os;
  os << iv;
  return os.str();
}

ExtendedInterval ExtendedInterval::finite(Position left, Position right) {
  make_interval(left, right);
  return {Kind::finite, left, right};
}

Position ExtendedInterval::left() const {
  if (!has_left()) throw std::logic_error("interval has no left extreme");
  return left_;
}

Position ExtendedInterval::right() const {
  if (!has_right()) throw std::logic_error("interval has no right extreme");
  return right_;
}

bool ExtendedInterval::contains(const ExtendedInterval& other) const {
  if (other.kind_ == Kind::empty || kind_ == Kind::full) return true;
  if (kind_ == Kind::empty || other.kind_ == Kind::full) return false;
  // Both nonempty proper: compare the extremes that exist.
  if (has_left() && (!other.has_left() || other.left_ < left_)) return false;
  if (has_right() && (!other.has_right() || other.right_ > right_)) return false;
  return true;
}

bool ExtendedInterval::contains(const Interval& iv) const {
  return contains(finite(iv.left, iv.right));
}

bool ExtendedInterval::contains(Position x) const {
  return contains(Interval::point(x));
}

std::optional<Interval> ExtendedInterval::clamp(Position n) const {
  if (kind_ == Kind::empty) return std::nullopt;
  const Position lo = has_left() ? std::max<Position>(left_, 0) : 0;
  const Position hi = has_right() ? std::min<Position>(right_, n - 1) : n - 1;
  if (lo > hi) return std::nullopt;
  return Interval{lo, hi};
}

std::ostream& operator<<(std::ostream& os, const ExtendedInterval& iv) {
  switch (iv.kind()) {
    case ExtendedInterval::Kind::finite:
      return os << Interval{iv.left(), iv.right()};
    case ExtendedInterval::Kind::left_ray:
      return os << "(←.." << iv.right() << ']';
    case ExtendedInterval::Kind::right_ray:
      return os << '[' << iv.left() << "..→)";
    case ExtendedInterval::Kind::full:
      return os << "(←..→)";
    case ExtendedInterval::Kind::empty:
      return os << "∅";
  }
  return os;
}

std::string to_string(const ExtendedInterval& iv) {
  std::ostringstream os;
  os << iv;
  return os.str();
}

}  // namespace mis
