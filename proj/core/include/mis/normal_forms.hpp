#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "mis/antichain.hpp"
#include "mis/interval.hpp"

namespace mis {

/// A possibly infinite antichain with a finite description: an optional run
/// of all singletons [x] with x <= low, a finite core, and an optional run of
/// all singletons [x] with x >= high. Also represents the top element.
///
/// Values are kept canonical: core singletons adjacent to a ray are folded
/// into it, so structural equality is semantic equality. Lattice operations
/// are not defined on ray-bearing values; materialize them first.
class GeneralAntichain {
public:
  GeneralAntichain() = default;
  /* implicit */ GeneralAntichain(Antichain finite);

  /// Validates the ray/core ordering and canonicalizes. Throws
  /// std::invalid_argument when the rays would cover every position (the
  /// coatom of the unbounded lattice, which has no finite description here).
  static GeneralAntichain make(std::optional<Position> low, Antichain core,
                               std::optional<Position> high);

  bool is_top() const { return core_.is_top(); }
  bool is_finite() const { return !low_ && !high_; }
  const std::optional<Position>& low_ray() const { return low_; }
  const std::optional<Position>& high_ray() const { return high_; }
  /// The finite members (or the top element).
  const Antichain& core() const { return core_; }

  friend bool operator==(const GeneralAntichain&, const GeneralAntichain&) = default;

private:
  std::optional<Position> low_;
  Antichain core_;
  std::optional<Position> high_;
};

/// Expands the rays inside {0..n-1} and merges them with the core.
Antichain materialize(const GeneralAntichain& g, Position n);
/// Same, dispatching on the universe; unbounded values must be finite.
Antichain materialize(const GeneralAntichain& g, const Universe& u);

std::ostream& operator<<(std::ostream& os, const GeneralAntichain& g);
std::string to_string(const GeneralAntichain& g);

/// An antichain of extended intervals under inclusion, in natural order: the
/// left ray first, then finite intervals by left extreme, then the right ray.
/// The full line or the empty interval, when present, is the only element.
class CritSet {
public:
  CritSet() = default;
  /// Throws std::invalid_argument unless the elements are pairwise
  /// incomparable and in natural order.
  static CritSet make(std::vector<ExtendedInterval> elements);

  std::span<const ExtendedInterval> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const ExtendedInterval& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// Each element clamped to {0..n-1}; the empty interval stays empty.
  std::vector<std::optional<Interval>> clamp(Position n) const;

  friend bool operator==(const CritSet&, const CritSet&) = default;

private:
  std::vector<ExtendedInterval> elements_;
};

std::ostream& operator<<(std::ostream& os, const CritSet& s);
std::string to_string(const CritSet& s);

/// The meet-irreducible ~I: every singleton outside I.
GeneralAntichain tilde(const ExtendedInterval& iv, const Universe& u);

/// {[l..r]} when l < r, otherwise the run of singletons [r]..[l].
Antichain ep(Position l, Position r);

/// The critical intervals of A: the inclusion-maximal intervals (finite or
/// not) containing no member of A. Over a bounded universe the rays are kept
/// symbolic and only emitted when nonempty after clamping.
CritSet critical_intervals(const Antichain& a, const Universe& u);

/// The meet of ~I over I ∈ S, computed in closed form.
GeneralAntichain meet_of_irreducibles(const CritSet& s, const Universe& u);

/// Heyting residual A → B: the greatest C with A ∧ C <= B. Linear in the
/// sizes of A, B and the (symbolic) result.
GeneralAntichain relative_pseudo_complement(const Antichain& a, const Antichain& b,
                                            const Universe& u);

}  // namespace mis
