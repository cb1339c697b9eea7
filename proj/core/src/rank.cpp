#include "mis/rank.hpp"

#include <stdexcept>
#include <string>

namespace mis {

std::uint64_t top_rank(Position n) {
  const auto m = static_cast<std::uint64_t>(n);
  return 1 + m * (m + 1) / 2;
}

std::uint64_t rank(const Antichain& a, Position n) {
  if (n < 1) throw std::invalid_argument("universe size must be positive");
  if (a.is_top()) return top_rank(n);
  if (!a.fits(n)) {
    throw std::out_of_range(to_string(a) + " does not fit in a universe of size " +
                            std::to_string(n));
  }
  if (a.is_bottom()) return 0;
  std::uint64_t r = static_cast<std::uint64_t>((1 + a[0].left) * (n - a[0].right));
  for (std::size_t i = 1; i < a.size(); ++i) {
    r += static_cast<std::uint64_t>((a[i].left - a[i - 1].left) * (n - a[i].right));
  }
  return r;
}

}  // namespace mis
