#include <gtest/gtest.h>

#include <stdexcept>

#include "mis/agreement.hpp"
#include "mis/enumeration.hpp"
#include "mis/operators.hpp"
#include "mis/oracle.hpp"

namespace mis {
namespace {

using namespace mis::oracle;

Antichain ac(std::initializer_list<Interval> ivs) { return Antichain::normalize(ivs); }

TEST(DownSet, Examples) {
  EXPECT_EQ(downset(Antichain::bottom(), 3).size(), 0u);
  EXPECT_EQ(downset(ac({{0, 0}}), 2).members(), (std::vector<Interval>{{0, 0}, {0, 1}}));
  for (Position n = 1; n <= 6; ++n) {
    EXPECT_EQ(downset(Antichain::all_points(n), n).size(), static_cast<std::size_t>(n * (n + 1) / 2));
  }
}

TEST(DownSet, ClosedUnderSuperintervals) {
  for (const auto& a : all_antichains(5)) {
    if (a.is_top()) continue;
    const auto d = downset(a, 5);
    for (const auto& iv : d.members()) {
      if (iv.left > 0) ASSERT_TRUE(d.contains({iv.left - 1, iv.right}));
      if (iv.right < 4) ASSERT_TRUE(d.contains({iv.left, iv.right + 1}));
    }
    ASSERT_EQ(d.generators(), a);
  }
}

TEST(DownSet, RejectsOutOfUniverse) {
  EXPECT_THROW(downset(ac({{0, 5}}), 3), std::out_of_range);
  EXPECT_THROW(DownSet(0), std::invalid_argument);
}

TEST(OracleLeq, Examples) {
  EXPECT_TRUE(oracle_leq(Antichain::bottom(), ac({{1, 1}}), 5));
  EXPECT_TRUE(oracle_leq(ac({{1, 3}}), ac({{2, 2}}), 5));
  for (Position n = 1; n <= 5; ++n) {
    EXPECT_FALSE(oracle_leq(Antichain::top(), Antichain::all_points(n), n));
  }
}

TEST(OracleLeq, AgreesWithCoreOnE6) {
  const auto all = all_antichains(6);
  for (const auto& a : all) {
    for (const auto& b : all) ASSERT_EQ(oracle_leq(a, b, 6), leq(a, b)) << a << " " << b;
  }
}

TEST(OracleBound, Examples) {
  EXPECT_EQ(oracle_bound(ac({{0, 0}}), ac({{2, 2}}), 3, BoundKind::meet), ac({{0, 2}}));
  const auto a = ac({{0, 1}, {3, 3}});
  EXPECT_EQ(oracle_bound(a, Antichain::bottom(), 4, BoundKind::join), a);
  EXPECT_EQ(oracle_bound(a, Antichain::top(), 4, BoundKind::meet), a);
  EXPECT_EQ(oracle_bound(a, Antichain::top(), 4, BoundKind::join), Antichain::top());
}

TEST(OracleResidual, Examples) {
  const auto b = ac({{1, 2}, {4, 4}});
  EXPECT_EQ(oracle_residual(Antichain::top(), b, 5, ResidualKind::implies), b);
  EXPECT_EQ(oracle_residual(ac({{5, 5}}), ac({{5, 6}}), 10, ResidualKind::implies),
            ac({{6, 6}, {7, 7}, {8, 8}, {9, 9}}));
  EXPECT_EQ(oracle_residual(b, b, 5, ResidualKind::minus), Antichain::bottom());
  EXPECT_THROW(ResidualOracle(kResidualMaxN + 1), std::length_error);
}

TEST(OracleCrit, Examples) {
  for (Position n = 1; n <= 5; ++n) {
    EXPECT_EQ(oracle_crit(Antichain::bottom(), n).clamp(n),
              (std::vector<std::optional<Interval>>{Interval{0, n - 1}}));
    EXPECT_EQ(oracle_crit(Antichain::all_points(n), n).clamp(n),
              (std::vector<std::optional<Interval>>{std::nullopt}));
  }
  EXPECT_EQ(oracle_crit(ac({{2, 2}, {5, 5}}), 8).clamp(8),
            (std::vector<std::optional<Interval>>{Interval{0, 1}, Interval{3, 4}, Interval{6, 7}}));
}

TEST(OracleRank, Examples) {
  EXPECT_EQ(oracle_rank(ac({{1, 2}}), 4), 4u);
  EXPECT_EQ(oracle_rank(Antichain::bottom(), 4), 0u);
  EXPECT_EQ(oracle_rank(Antichain::all_points(4), 4), 10u);
}

TEST(Agreement, ExhaustiveOnE4) {
  CheckOptions options;
  options.n = 4;
  for (const auto& report : check_agreement(options)) {
    EXPECT_TRUE(report.passed()) << to_string(report.op) << ": " << report.first_mismatch;
    EXPECT_EQ(report.cases, report.op == CheckedOp::crit || report.op == CheckedOp::rank ? 43u : 1849u);
  }
}

TEST(Agreement, SampledOnE6) {
  CheckOptions options;
  options.n = 6;
  options.samples = 10000;
  for (const auto& report : check_agreement(options)) {
    EXPECT_TRUE(report.passed()) << to_string(report.op) << ": " << report.first_mismatch;
    EXPECT_EQ(report.cases, 10000u);
  }
}

TEST(Agreement, OperatorNames) {
  for (CheckedOp op : all_checked_ops()) EXPECT_EQ(parse_checked_op(to_string(op)), op);
  EXPECT_EQ(parse_checked_op("nope"), std::nullopt);
  EXPECT_EQ(all_checked_ops().size(), 7u);
}

}  // namespace
}  // namespace mis
