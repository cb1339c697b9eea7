#pragma once

#include <string_view>

#include "mis/antichain.hpp"

// Lattice and derived operators on antichains of intervals.
//
// All binary operators run in linear time over the normal forms of their
// operands. The top element {∅} behaves as the one-element set holding the
// empty interval wherever an operator is defined by membership tests.

namespace mis {

enum class ContainmentMode { containing, not_containing, contained_in, not_contained_in };
enum class StrictMode { strictly_containing, not_strictly_containing };

std::string_view to_string(ContainmentMode mode);
std::string_view to_string(StrictMode mode);

/// A <= B iff every interval of A contains some interval of B.
bool leq(const Antichain& a, const Antichain& b);

/// Least upper bound: the inclusion-minimal members of A ∪ B.
Antichain join(const Antichain& a, const Antichain& b);

/// Greatest lower bound: the minimal spans of one interval from each side.
Antichain meet(const Antichain& a, const Antichain& b);

/// Brouwerian residual A − B: members of A containing no member of B.
Antichain pseudo_difference(const Antichain& a, const Antichain& b);

/// (A − B) ∨ (B − A).
Antichain sym_difference(const Antichain& a, const Antichain& b);

/// Plain set intersection of the two antichains.
Antichain intersect(const Antichain& a, const Antichain& b);

/// Members of A selected by whether they contain (or are contained in) some
/// member of B.
Antichain filter_containment(const Antichain& a, const Antichain& b, ContainmentMode mode);

/// Strict variants of containing / not containing, computed through
/// pseudo-differences: A − (B − A) and A − (A − (B − A)).
Antichain strict_containment(const Antichain& a, const Antichain& b, StrictMode mode);

/// Minimal spans [min I..max J] with I ∈ A strictly before J ∈ B. Top is the
/// identity on both sides.
Antichain ordered_meet(const Antichain& a, const Antichain& b);

/// Spans [min I..max J] with J starting right after I ends (phrase
/// concatenation). Top is the identity on both sides.
Antichain block(const Antichain& a, const Antichain& b);

}  // namespace mis
