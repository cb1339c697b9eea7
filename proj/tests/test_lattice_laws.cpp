#include <gtest/gtest.h>

#include <random>

#include "mis/enumeration.hpp"
#include "mis/operators.hpp"
#include "mis/oracle.hpp"
#include "support/generators.hpp"
#include "support/laws.hpp"

namespace mis {
namespace {

using testing::LawResult;

void expect_all_hold(const std::vector<LawResult>& results) {
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " failures of " << r.checked
                        << ", first at " << r.first_failure;
  }
}

const std::vector<Antichain>& e4() {
  static const auto all = all_antichains(4);
  return all;
}

TEST(LatticeLaws, ExhaustiveOnE4) { expect_all_hold(testing::lattice_laws(e4())); }

TEST(LatticeLaws, AdjunctionsOnE4) { expect_all_hold(testing::adjunctions(e4(), 4)); }

TEST(LatticeLaws, IdentitiesOnE4) { expect_all_hold(testing::identity_laws(e4())); }

TEST(LatticeLaws, RandomUnboundedSample) {
  std::mt19937_64 rng(11);
  std::vector<Antichain> xs{Antichain::bottom(), Antichain::top()};
  for (int i = 0; i < 22; ++i) xs.push_back(testing::random_small(rng));
  expect_all_hold(testing::lattice_laws(xs));
  expect_all_hold(testing::identity_laws(xs));
}

TEST(LatticeLaws, CounterexamplesAreGenuine) {
  const auto rows = testing::counterexamples();
  EXPECT_EQ(rows.size(), 15u);
  for (const auto& row : rows) EXPECT_NE(row.lhs, row.rhs) << row.name << " = " << row.lhs;
}

TEST(LatticeLaws, UniqueAtomAndCoatom) {
  for (Position n = 1; n <= 5; ++n) {
    const auto all = all_antichains(n);
    std::vector<Antichain> atoms, coatoms;
    for (const auto& x : all) {
      if (x.is_bottom() || x.is_top()) continue;
      const bool atom = std::none_of(all.begin(), all.end(), [&](const Antichain& y) {
        return !y.is_bottom() && y != x && leq(y, x);
      });
      const bool coatom = std::none_of(all.begin(), all.end(), [&](const Antichain& y) {
        return !y.is_top() && y != x && leq(x, y);
      });
      if (atom) atoms.push_back(x);
      if (coatom) coatoms.push_back(x);
    }
    ASSERT_EQ(atoms.size(), 1u) << "n=" << n;
    ASSERT_EQ(coatoms.size(), 1u) << "n=" << n;
    EXPECT_EQ(atoms[0], Antichain::from_sorted({{0, n - 1}}));
    EXPECT_EQ(coatoms[0], Antichain::all_points(n));
  }
}

class AgainstScans : public ::testing::Test {
protected:
  std::mt19937_64 rng{0xabc};

  Antichain draw() {
    std::uniform_int_distribution<int> kind(0, 19);
    switch (kind(rng)) {
      case 0: return Antichain::top();
      case 1: return Antichain::bottom();
      default: return testing::random_small(rng, -10, 30);
    }
  }
};

TEST_F(AgainstScans, EveryOperatorMatchesItsDefinition) {
  for (int i = 0; i < 20000; ++i) {
    const Antichain a = draw();
    const Antichain b = draw();
    ASSERT_EQ(leq(a, b), oracle::leq_scan(a, b)) << a << " " << b;
    ASSERT_EQ(join(a, b), oracle::join_scan(a, b)) << a << " " << b;
    ASSERT_EQ(meet(a, b), oracle::meet_scan(a, b)) << a << " " << b;
    ASSERT_EQ(pseudo_difference(a, b), oracle::difference_scan(a, b)) << a << " " << b;
    for (auto mode : testing::kAllModes) {
      ASSERT_EQ(filter_containment(a, b, mode), oracle::filter_scan(a, b, mode))
          << a << " " << b << " " << to_string(mode);
    }
    for (auto mode : {StrictMode::strictly_containing, StrictMode::not_strictly_containing}) {
      ASSERT_EQ(strict_containment(a, b, mode), oracle::strict_scan(a, b, mode))
          << a << " " << b << " " << to_string(mode);
    }
    ASSERT_EQ(ordered_meet(a, b), oracle::ordered_meet_scan(a, b)) << a << " " << b;
    ASSERT_EQ(block(a, b), oracle::block_scan(a, b)) << a << " " << b;
  }
}

TEST_F(AgainstScans, ResultsAreInNormalForm) {
  for (int i = 0; i < 5000; ++i) {
    const Antichain a = draw();
    const Antichain b = draw();
    for (const auto& r : {join(a, b), meet(a, b), pseudo_difference(a, b), sym_difference(a, b),
                          intersect(a, b), ordered_meet(a, b), block(a, b)}) {
      ASSERT_TRUE(is_normal_form(r.intervals())) << r;
    }
  }
}

TEST_F(AgainstScans, OrderedOperatorsAssociate) {
  for (int i = 0; i < 5000; ++i) {
    const Antichain a = draw(), b = draw(), c = draw();
    ASSERT_EQ(ordered_meet(ordered_meet(a, b), c), ordered_meet(a, ordered_meet(b, c)))
        << a << " " << b << " " << c;
    ASSERT_EQ(block(block(a, b), c), block(a, block(b, c))) << a << " " << b << " " << c;
  }
}

TEST_F(AgainstScans, LargeOperandsAgree) {
  for (int i = 0; i < 50; ++i) {
    const Antichain a = testing::random_antichain(rng, 0, 400, 150, 12);
    const Antichain b = testing::random_antichain(rng, 0, 400, 150, 12);
    ASSERT_EQ(meet(a, b), oracle::meet_scan(a, b));
    ASSERT_EQ(join(a, b), oracle::join_scan(a, b));
    ASSERT_EQ(ordered_meet(a, b), oracle::ordered_meet_scan(a, b));
  }
}

TEST(Downsets, JoinAndMeetMatchUnionAndIntersection) {
  const auto& xs = e4();
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      if (a.is_top() || b.is_top()) continue;
      const auto da = oracle::downset(a, 4);
      const auto db = oracle::downset(b, 4);
      ASSERT_EQ(oracle::downset(join(a, b), 4).members(), da.united(db).members());
      ASSERT_EQ(oracle::downset(meet(a, b), 4).members(), da.intersected(db).members());
    }
  }
}

}  // namespace
}  // namespace mis
