#include <gtest/gtest.h>

#include <stdexcept>

#include "mis/enumeration.hpp"
#include "mis/operators.hpp"
#include "mis/oracle.hpp"
#include "mis/rank.hpp"

namespace mis {
namespace {

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Antichain::from_sorted({{1, 2}}), 4), 4u);
  for (Position n = 1; n <= 6; ++n) EXPECT_EQ(rank(Antichain::bottom(), n), 0u);
  EXPECT_EQ(rank(Antichain::all_points(4), 4), 10u);
  EXPECT_EQ(rank(Antichain::top(), 4), 11u);
}

TEST(Rank, TopIsOnePlusTriangular) {
  for (Position n = 1; n <= 8; ++n) {
    const auto expected = 1 + static_cast<std::uint64_t>(n * (n + 1) / 2);
    EXPECT_EQ(rank(Antichain::top(), n), expected);
    EXPECT_EQ(top_rank(n), expected);
  }
}

TEST(Rank, RejectsBadArguments) {
  EXPECT_THROW(rank(Antichain::from_sorted({{0, 4}}), 4), std::out_of_range);
  EXPECT_THROW(rank(Antichain::bottom(), 0), std::invalid_argument);
}

TEST(Rank, MatchesOracleOnSmallLattices) {
  for (Position n = 1; n <= 5; ++n) {
    for (const auto& a : all_antichains(n)) {
      ASSERT_EQ(rank(a, n), oracle::oracle_rank(a, n)) << a;
      if (a.is_proper()) ASSERT_EQ(rank(a, n), oracle::downset(a, n).size()) << a;
    }
  }
}

TEST(Rank, CoversIncreaseRankByOne) {
  const auto all = all_antichains(4);
  for (const auto& x : all) {
    for (const auto& y : all) {
      if (x == y || !leq(y, x)) continue;
      const bool covers = std::none_of(all.begin(), all.end(), [&](const Antichain& z) {
        return z != x && z != y && leq(y, z) && leq(z, x);
      });
      if (covers) ASSERT_EQ(rank(x, 4), rank(y, 4) + 1) << x << " covers " << y;
    }
  }
}

}  // namespace
}  // namespace mis
