#include "mis/agreement.hpp"

#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "mis/enumeration.hpp"
#include "mis/normal_forms.hpp"
#include "mis/operators.hpp"
#include "mis/oracle.hpp"
#include "mis/rank.hpp"

namespace mis {

namespace {

constexpr CheckedOp kAllOps[] = {CheckedOp::leq,     CheckedOp::join, CheckedOp::meet,
                                 CheckedOp::minus,   CheckedOp::implies, CheckedOp::crit,
                                 CheckedOp::rank};

bool is_unary(CheckedOp op) { return op == CheckedOp::crit || op == CheckedOp::rank; }

std::string describe(const std::vector<std::optional<Interval>>& clamped) {
  std::ostringstream os;
  os << '{';
  const char* sep = "";
  for (const auto& iv : clamped) {
    os << sep;
    if (iv) {
      os << *iv;
    } else {
      os << "∅";
    }
    sep = ", ";
  }
  os << '}';
  return os.str();
}

// Compares one case; returns a description of the disagreement, if any.
class CaseChecker {
public:
  explicit CaseChecker(Position n) : n_{n}, universe_{Universe::bounded(n)} {}

  std::optional<std::string> check(CheckedOp op, const Antichain& a, const Antichain& b) {
    std::ostringstream os;
    switch (op) {
      case CheckedOp::leq: {
        const bool fast = leq(a, b);
        const bool slow = oracle::oracle_leq(a, b, n_);
        if (fast == slow) return std::nullopt;
        os << "leq(" << a << ", " << b << "): closed form " << fast << ", oracle " << slow;
        break;
      }
      case CheckedOp::join:
      case CheckedOp::meet: {
        const bool is_join = op == CheckedOp::join;
        const Antichain fast = is_join ? join(a, b) : meet(a, b);
        const Antichain slow = oracle::oracle_bound(
            a, b, n_, is_join ? oracle::BoundKind::join : oracle::BoundKind::meet);
        if (fast == slow) return std::nullopt;
        os << to_string(op) << '(' << a << ", " << b << "): closed form " << fast << ", oracle " << slow;
        break;
      }
      case CheckedOp::minus: {
        const Antichain fast = pseudo_difference(a, b);
        const Antichain slow = residuals().minus(a, b);
        if (fast == slow) return std::nullopt;
        os << "minus(" << a << ", " << b << "): closed form " << fast << ", oracle " << slow;
        break;
      }
      case CheckedOp::implies: {
        const GeneralAntichain symbolic = relative_pseudo_complement(a, b, universe_);
        const Antichain fast = materialize(symbolic, n_);
        const Antichain slow = residuals().implies(a, b);
        if (fast == slow) return std::nullopt;
        os << "implies(" << a << ", " << b << "): closed form " << fast << ", oracle " << slow;
        break;
      }
      case CheckedOp::crit: {
        const auto fast = critical_intervals(a, universe_).clamp(n_);
        const auto slow = oracle::oracle_crit(a, n_).clamp(n_);
        if (fast == slow) return std::nullopt;
        os << "crit(" << a << "): closed form " << describe(fast) << ", oracle " << describe(slow);
        break;
      }
      case CheckedOp::rank: {
        const auto fast = rank(a, n_);
        const auto slow = oracle::oracle_rank(a, n_);
        if (fast == slow) return std::nullopt;
        os << "rank(" << a << "): closed form " << fast << ", oracle " << slow;
        break;
      }
    }
    return os.str();
  }

private:
  const oracle::ResidualOracle& residuals() {
    if (!residuals_) residuals_ = std::make_unique<oracle::ResidualOracle>(n_);
    return *residuals_;
  }

  Position n_;
  Universe universe_;
  std::unique_ptr<oracle::ResidualOracle> residuals_;
};

}  // namespace

std::string_view to_string(CheckedOp op) {
  switch (op) {
    case CheckedOp::leq: return "leq";
    case CheckedOp::join: return "join";
    case CheckedOp::meet: return "meet";
    case CheckedOp::minus: return "minus";
    case CheckedOp::implies: return "implies";
    case CheckedOp::crit: return "crit";
    case CheckedOp::rank: return "rank";
  }
  return "?";
}

std::optional<CheckedOp> parse_checked_op(std::string_view name) {
  for (CheckedOp op : kAllOps) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

std::vector<CheckedOp> all_checked_ops() { return {std::begin(kAllOps), std::end(kAllOps)}; }

std::vector<OpReport> check_agreement(const CheckOptions& options) {
  const std::vector<Antichain> elements = all_antichains(options.n);
  CaseChecker checker(options.n);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);

  std::vector<OpReport> reports;
  for (CheckedOp op : options.ops) {
    OpReport report{op, 0, 0, {}};
    auto run = [&](const Antichain& a, const Antichain& b) {
      ++report.cases;
      if (auto mismatch = checker.check(op, a, b)) {
        if (report.mismatches++ == 0) report.first_mismatch = std::move(*mismatch);
      }
    };
    if (options.samples) {
      for (std::uint64_t s = 0; s < *options.samples; ++s) {
        const Antichain& a = elements[pick(rng)];
        run(a, is_unary(op) ? a : elements[pick(rng)]);
      }
    } else if (is_unary(op)) {
      for (const auto& a : elements) run(a, a);
    } else {
      for (const auto& a : elements) {
        for (const auto& b : elements) run(a, b);
      }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace mis
