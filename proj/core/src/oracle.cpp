#include "mis/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mis/enumeration.hpp"

namespace mis::oracle {

namespace {

// A member of an antichain seen as a set of positions; nullopt is ∅.
using Member = std::optional<Interval>;

std::vector<Member> members_of(const Antichain& a) {
  if (a.is_top()) return {std::nullopt};
  return {a.begin(), a.end()};
}

bool subset(const Member& x, const Member& y) {
  if (!x) return true;
  if (!y) return false;
  return y->left <= x->left && x->right <= y->right;
}

Antichain from_members(const std::vector<Member>& members) {
  for (const auto& m : members) {
    if (!m) return Antichain::top();
  }
  std::vector<Interval> out;
  for (const auto& m : members) out.push_back(*m);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return Antichain::from_sorted(std::move(out));
}

void require_fits(const Antichain& a, Position n) {
  if (!a.fits(n)) {
    throw std::out_of_range(to_string(a) + " does not fit in a universe of size " +
                            std::to_string(n));
  }
}

}  // namespace

// DownSet

DownSet::DownSet(Position n) : n_{n}, bits_(static_cast<std::size_t>(n * n), false) {
  if (n < 1) throw std::invalid_argument("universe size must be positive");
}

DownSet DownSet::everything(Position n) {
  DownSet d(n);
  for (Position l = 0; l < n; ++l) {
    for (Position r = l; r < n; ++r) d.insert({l, r});
  }
  d.insert_empty();
  return d;
}

std::size_t DownSet::index(const Interval& iv) const {
  if (iv.left < 0 || iv.right >= n_ || iv.left > iv.right) {
    throw std::out_of_range(to_string(iv) + " is outside the universe");
  }
  return static_cast<std::size_t>(iv.left * n_ + iv.right);
}

bool DownSet::contains(const Interval& iv) const { return bits_[index(iv)]; }

void DownSet::insert(const Interval& iv) { bits_[index(iv)] = true; }

std::size_t DownSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true)) + (empty_ ? 1 : 0);
}

std::vector<Interval> DownSet::members() const {
  std::vector<Interval> out;
  for (Position l = 0; l < n_; ++l) {
    for (Position r = l; r < n_; ++r) {
      if (contains({l, r})) out.push_back({l, r});
    }
  }
  return out;
}

bool DownSet::subset_of(const DownSet& other) const {
  if (empty_ && !other.empty_) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

DownSet DownSet::united(const DownSet& other) const {
  DownSet d(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) d.bits_[i] = bits_[i] || other.bits_[i];
  d.empty_ = empty_ || other.empty_;
  return d;
}

DownSet DownSet::intersected(const DownSet& other) const {
  DownSet d(n_);
  for (std::size_t i = 0; i < bits_.size(); ++i) d.bits_[i] = bits_[i] && other.bits_[i];
  d.empty_ = empty_ && other.empty_;
  return d;
}

Antichain DownSet::generators() const {
  if (empty_) return Antichain::top();
  // The set is closed under superintervals, so a member is inclusion-minimal
  // iff neither of its two largest proper subintervals is a member.
  std::vector<Interval> out;
  for (const auto& iv : members()) {
    const bool shrink_left = iv.left < iv.right && contains({iv.left + 1, iv.right});
    const bool shrink_right = iv.left < iv.right && contains({iv.left, iv.right - 1});
    if (!shrink_left && !shrink_right) out.push_back(iv);
  }
  return Antichain::from_sorted(std::move(out));
}

DownSet downset(const Antichain& a, Position n) {
  if (a.is_top()) return DownSet::everything(n);
  require_fits(a, n);
  DownSet d(n);
  for (Position l = 0; l < n; ++l) {
    for (Position r = l; r < n; ++r) {
      for (const auto& iv : a) {
        if (l <= iv.left && iv.right <= r) {
          d.insert({l, r});
          break;
        }
      }
    }
  }
  return d;
}

bool oracle_leq(const Antichain& a, const Antichain& b, Position n) {
  if (a.is_bottom() || b.is_top()) return true;
  if (a.is_top()) return false;
  return downset(a, n).subset_of(downset(b, n));
}

Antichain oracle_bound(const Antichain& a, const Antichain& b, Position n, BoundKind kind) {
  const DownSet da = downset(a, n);
  const DownSet db = downset(b, n);
  return (kind == BoundKind::join ? da.united(db) : da.intersected(db)).generators();
}

// ResidualOracle

ResidualOracle::ResidualOracle(Position n) : n_{n} {
  if (n < 1 || n > kResidualMaxN) {
    throw std::length_error("residual oracle supports 1 <= n <= " + std::to_string(kResidualMaxN));
  }
  for (Position l = 0; l < n; ++l) {
    for (Position r = l; r < n; ++r) intervals_.push_back({l, r});
  }
  empty_bit_ = Mask{1} << intervals_.size();
  enumerate_all(n, [&](const Antichain& c) { candidates_.push_back(mask_of(c)); });
}

ResidualOracle::Mask ResidualOracle::mask_of(const Antichain& a) const {
  if (a.is_top()) return (empty_bit_ << 1) - 1;
  require_fits(a, n_);
  Mask m = 0;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    for (const auto& iv : a) {
      if (intervals_[i].left <= iv.left && iv.right <= intervals_[i].right) {
        m |= Mask{1} << i;
        break;
      }
    }
  }
  return m;
}

Antichain ResidualOracle::decode(Mask m) const {
  DownSet d(n_);
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (m & (Mask{1} << i)) d.insert(intervals_[i]);
  }
  if (m & empty_bit_) d.insert_empty();
  return d.generators();
}

Antichain ResidualOracle::implies(const Antichain& a, const Antichain& b) const {
  const Mask ma = mask_of(a);
  const Mask mb = mask_of(b);
  Mask result = 0;
  for (Mask mc : candidates_) {
    if (((ma & mc) & ~mb) == 0) result |= mc;
  }
  return decode(result);
}

Antichain ResidualOracle::minus(const Antichain& a, const Antichain& b) const {
  const Mask ma = mask_of(a);
  const Mask mb = mask_of(b);
  Mask result = (empty_bit_ << 1) - 1;
  for (Mask mc : candidates_) {
    if ((ma & ~(mb | mc)) == 0) result &= mc;
  }
  return decode(result);
}

Antichain oracle_residual(const Antichain& a, const Antichain& b, Position n, ResidualKind kind) {
  const ResidualOracle oracle(n);
  return kind == ResidualKind::implies ? oracle.implies(a, b) : oracle.minus(a, b);
}

CritSet oracle_crit(const Antichain& a, Position n) {
  const auto holds = members_of(a);
  auto avoids = [&](const Member& candidate) {
    return std::none_of(holds.begin(), holds.end(),
                        [&](const Member& m) { return subset(m, candidate); });
  };
  std::vector<Member> pool;
  for (Position l = 0; l < n; ++l) {
    for (Position r = l; r < n; ++r) {
      if (avoids(Interval{l, r})) pool.push_back(Interval{l, r});
    }
  }
  if (avoids(std::nullopt)) pool.push_back(std::nullopt);

  std::vector<ExtendedInterval> out;
  for (const auto& c : pool) {
    const bool maximal = std::none_of(pool.begin(), pool.end(), [&](const Member& other) {
      return subset(c, other) && !subset(other, c);
    });
    if (!maximal) continue;
    out.push_back(c ? ExtendedInterval::finite(*c) : ExtendedInterval::empty());
  }
  return CritSet::make(std::move(out));
}

std::uint64_t oracle_rank(const Antichain& a, Position n) {
  std::uint64_t count = 0;
  for (Position l = 0; l < n; ++l) {
    for (Position r = l; r < n; ++r) {
      if (oracle_leq(Antichain::from_sorted({{l, r}}), a, n)) ++count;
    }
  }
  if (oracle_leq(Antichain::top(), a, n)) ++count;
  return count;
}

// Scans

bool leq_scan(const Antichain& a, const Antichain& b) {
  const auto mb = members_of(b);
  for (const auto& x : members_of(a)) {
    if (std::none_of(mb.begin(), mb.end(), [&](const Member& y) { return subset(y, x); })) {
      return false;
    }
  }
  return true;
}

Antichain minimal_scan(std::span<const Interval> intervals) {
  std::vector<Member> out;
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < intervals.size() && minimal; ++j) {
      if (intervals[i].contains(intervals[j]) && intervals[i] != intervals[j]) minimal = false;
    }
    if (minimal) out.push_back(intervals[i]);
  }
  return from_members(out);
}

namespace {

Antichain minimal_members(const std::vector<Member>& members) {
  for (const auto& m : members) {
    if (!m) return Antichain::top();
  }
  std::vector<Interval> plain;
  for (const auto& m : members) plain.push_back(*m);
  return minimal_scan(plain);
}

}  // namespace

Antichain join_scan(const Antichain& a, const Antichain& b) {
  auto all = members_of(a);
  const auto mb = members_of(b);
  all.insert(all.end(), mb.begin(), mb.end());
  return minimal_members(all);
}

Antichain meet_scan(const Antichain& a, const Antichain& b) {
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  std::vector<Interval> spans;
  for (const auto& x : a) {
    for (const auto& y : b) {
      spans.push_back({std::min(x.left, y.left), std::max(x.right, y.right)});
    }
  }
  return minimal_scan(spans);
}

Antichain difference_scan(const Antichain& a, const Antichain& b) {
  return filter_scan(a, b, ContainmentMode::not_containing);
}

Antichain filter_scan(const Antichain& a, const Antichain& b, ContainmentMode mode) {
  const auto mb = members_of(b);
  std::vector<Member> out;
  for (const auto& x : members_of(a)) {
    bool witnessed = false;
    for (const auto& y : mb) {
      const bool inside = mode == ContainmentMode::containing || mode == ContainmentMode::not_containing;
      if (inside ? subset(y, x) : subset(x, y)) witnessed = true;
    }
    const bool positive = mode == ContainmentMode::containing || mode == ContainmentMode::contained_in;
    if (witnessed == positive) out.push_back(x);
  }
  return from_members(out);
}

Antichain strict_scan(const Antichain& a, const Antichain& b, StrictMode mode) {
  const auto mb = members_of(b);
  std::vector<Member> out;
  for (const auto& x : members_of(a)) {
    const bool witnessed = std::any_of(mb.begin(), mb.end(), [&](const Member& y) {
      return subset(y, x) && !subset(x, y);
    });
    if (witnessed == (mode == StrictMode::strictly_containing)) out.push_back(x);
  }
  return from_members(out);
}

Antichain ordered_meet_scan(const Antichain& a, const Antichain& b) {
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  std::vector<Interval> spans;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.right < y.left) spans.push_back({x.left, y.right});
    }
  }
  return minimal_scan(spans);
}

Antichain block_scan(const Antichain& a, const Antichain& b) {
  if (a.is_top()) return b;
  if (b.is_top()) return a;
  std::vector<Interval> spans;
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (x.right + 1 == y.left) spans.push_back({x.left, y.right});
    }
  }
  return from_members({spans.begin(), spans.end()});
}

}  // namespace mis::oracle
