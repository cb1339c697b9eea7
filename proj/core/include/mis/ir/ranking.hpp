#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mis/antichain.hpp"
#include "mis/ir/index.hpp"

namespace mis::ir {

using Score = boost::multiprecision::cpp_rational;

/// Up to k pairwise disjoint members of A, shortest first (ties to the
/// leftmost), returned in left-to-right order. Throws std::invalid_argument
/// for the top element.
std::vector<Interval> snippets(const Antichain& a, std::size_t k);

/// Sum of 1/length over the members of A. Throws std::invalid_argument for
/// the top element, which has no finite members to score.
Score score(const Antichain& a);

/// Decimal rendering rounded half up, e.g. 177/50 -> "3.5400".
std::string format_score(const Score& s, int decimals = 4);

struct SearchResult {
  std::string doc_id;
  Score score;
  std::vector<Interval> snippets;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Evaluates the query on every document and ranks the non-empty answers by
/// score, best first; equal scores fall back to document id order.
/// Propagates ParseError.
std::vector<SearchResult> search(const PositionalIndex& index, std::string_view query, std::size_t k);

}  // namespace mis::ir
