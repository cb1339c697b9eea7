#pragma once

#include <cstdint>

#include "mis/antichain.hpp"

namespace mis {

/// Rank of A in the graded lattice over {0..n-1}: the number of
/// join-irreducibles {I} below A. Telescoping closed form, linear in |A|.
/// Throws std::out_of_range if A does not fit in the universe.
std::uint64_t rank(const Antichain& a, Position n);

/// Rank of the top element, 1 + n(n+1)/2.
std::uint64_t top_rank(Position n);

}  // namespace mis
