#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mis/antichain.hpp"
#include "mis/normal_forms.hpp"
#include "mis/operators.hpp"

// Brute-force reference implementations built directly from the definitions:
// lower sets of intervals, exhaustive scans and exhaustive search over the
// whole lattice. None of this shares code with the closed-form operators; it
// exists to check them.

namespace mis::oracle {

/// Largest universe accepted by the residual oracle.
inline constexpr Position kResidualMaxN = 10;

/// A lower set of the interval poset over {0..n-1} ordered by reverse
/// inclusion, i.e. a set of intervals closed under taking superintervals. The
/// empty interval is a member only for the lower set of the top element.
class DownSet {
public:
  explicit DownSet(Position n);
  /// Every interval of the universe, plus ∅.
  static DownSet everything(Position n);

  Position universe_size() const { return n_; }
  bool contains(const Interval& iv) const;
  bool contains_empty() const { return empty_; }
  std::size_t size() const;
  /// Members in lexicographic order (∅ excluded).
  std::vector<Interval> members() const;

  void insert(const Interval& iv);
  void insert_empty() { empty_ = true; }

  bool subset_of(const DownSet& other) const;
  DownSet united(const DownSet& other) const;
  DownSet intersected(const DownSet& other) const;
  /// The antichain generating this lower set: its inclusion-minimal members.
  Antichain generators() const;

  friend bool operator==(const DownSet&, const DownSet&) = default;

private:
  std::size_t index(const Interval& iv) const;

  Position n_;
  std::vector<bool> bits_;
  bool empty_ = false;
};

/// All intervals of {0..n-1} that contain some member of A (everything, and ∅,
/// for the top element).
DownSet downset(const Antichain& a, Position n);

bool oracle_leq(const Antichain& a, const Antichain& b, Position n);

enum class BoundKind { meet, join };
Antichain oracle_bound(const Antichain& a, const Antichain& b, Position n, BoundKind kind);

enum class ResidualKind { implies, minus };

/// Exhaustive search for the Heyting and Brouwerian residuals over every
/// element of the lattice on {0..n-1}. Candidate lower sets are computed once
/// per universe, so reuse an instance across queries.
class ResidualOracle {
public:
  /// Throws std::length_error for n > kResidualMaxN.
  explicit ResidualOracle(Position n);

  Position universe_size() const { return n_; }
  /// Join of all C with A ∧ C <= B.
  Antichain implies(const Antichain& a, const Antichain& b) const;
  /// Meet of all C with A <= B ∨ C.
  Antichain minus(const Antichain& a, const Antichain& b) const;

private:
  using Mask = std::uint64_t;
  Mask mask_of(const Antichain& a) const;
  Antichain decode(Mask m) const;

  Position n_;
  std::vector<Interval> intervals_;  // bit i <-> intervals_[i]; bit |intervals_| <-> ∅
  Mask empty_bit_;
  std::vector<Mask> candidates_;
};

Antichain oracle_residual(const Antichain& a, const Antichain& b, Position n, ResidualKind kind);

/// Inclusion-maximal members of {intervals of {0..n-1}} ∪ {∅} containing no
/// member of A, as finite intervals (or ∅).
CritSet oracle_crit(const Antichain& a, Position n);

/// Number of join-irreducibles {I} (I an interval of the universe, or ∅)
/// below A.
std::uint64_t oracle_rank(const Antichain& a, Position n);

// Definition-level scans over the unbounded line, quadratic in the operands.

bool leq_scan(const Antichain& a, const Antichain& b);
/// Inclusion-minimal members, by pairwise comparison.
Antichain minimal_scan(std::span<const Interval> intervals);
Antichain join_scan(const Antichain& a, const Antichain& b);
Antichain meet_scan(const Antichain& a, const Antichain& b);
Antichain difference_scan(const Antichain& a, const Antichain& b);
Antichain filter_scan(const Antichain& a, const Antichain& b, ContainmentMode mode);
Antichain strict_scan(const Antichain& a, const Antichain& b, StrictMode mode);
Antichain ordered_meet_scan(const Antichain& a, const Antichain& b);
Antichain block_scan(const Antichain& a, const Antichain& b);

}  // namespace mis::oracle
