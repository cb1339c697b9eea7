#include "mis/ir/ranking.hpp"

#include <algorithm>
#include <stdexcept>

#include "mis/ir/query.hpp"

namespace mis::ir {

std::vector<Interval> snippets(const Antichain& a, std::size_t k) {
  if (a.is_top()) throw std::invalid_argument("the top element has no snippets");
  std::vector<Interval> by_length(a.begin(), a.end());
  std::stable_sort(by_length.begin(), by_length.end(), [](const Interval& x, const Interval& y) {
    return x.length() < y.length();
  });
  std::vector<Interval> chosen;
  for (const auto& iv : by_length) {
    if (chosen.size() == k) break;
    const bool clashes = std::any_of(chosen.begin(), chosen.end(),
                                     [&](const Interval& c) { return c.overlaps(iv); });
    if (!clashes) chosen.push_back(iv);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

Score score(const Antichain& a) {
  if (a.is_top()) throw std::invalid_argument("the top element cannot be scored");
  Score total = 0;
  for (const auto& iv : a) total += Score(1, iv.length());
  return total;
}

std::string format_score(const Score& s, int decimals) {
  using boost::multiprecision::cpp_int;
  if (decimals < 0) throw std::invalid_argument("negative precision");
  cpp_int scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  const cpp_int num = boost::multiprecision::numerator(s);
  const cpp_int den = boost::multiprecision::denominator(s);
  const bool negative = num < 0;
  const cpp_int scaled = ((negative ? -num : num) * scale * 2 + den) / (den * 2);

  std::string digits = scaled.str();
  if (digits.size() <= static_cast<std::size_t>(decimals)) {
    digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
  }
  if (decimals > 0) digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
  return (negative && scaled != 0 ? "-" : "") + digits;
}

std::vector<SearchResult> search(const PositionalIndex& index, std::string_view query, std::size_t k) {
  const Query q = parse_query(query);
  std::vector<SearchResult> results;
  for (const auto& [id, doc] : index.documents()) {
    const Antichain answer = evaluate(q, doc);
    if (answer.is_bottom()) continue;
    if (answer.is_top()) throw std::logic_error("query evaluated to the top element");
    results.push_back({id, score(answer), snippets(answer, k)});
  }
  // Documents are visited in id order, so a stable sort keeps ties by id.
  std::stable_sort(results.begin(), results.end(),
                   [](const SearchResult& x, const SearchResult& y) { return x.score > y.score; });
  return results;
}

}  // namespace mis::ir
