#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mis/antichain.hpp"
#include "mis/ir/index.hpp"
#include "mis/operators.hpp"

namespace mis::ir {

enum class QueryOp {
  term,
  any_of,        // OR
  all_of,        // AND
  ordered,       // <
  block,         // ++
  containment,   // >>, !>>, <<, !<<
  strict,        // >>>, !>>>
  minus,         // MINUS
  within,        // WITHIN k
};

/// A structured query tree. Leaves are terms; every other node maps to a
/// lattice operator on the antichains of its children.
class Query {
public:
  static Query term(std::string text);
  /// Requires at least two children.
  static Query any_of(std::vector<Query> children);
  static Query all_of(std::vector<Query> children);
  static Query ordered(Query left, Query right);
  static Query block(Query left, Query right);
  static Query containment(Query left, Query right, ContainmentMode mode);
  static Query strict(Query left, Query right, StrictMode mode);
  static Query minus(Query left, Query right);
  /// Keeps intervals at most k positions long; k >= 1.
  static Query within(Query child, Position k);

  QueryOp op() const { return op_; }
  const std::string& text() const { return text_; }
  const std::vector<Query>& children() const { return children_; }
  ContainmentMode containment_mode() const { return std::get<ContainmentMode>(param_); }
  StrictMode strict_mode() const { return std::get<StrictMode>(param_); }
  Position window() const { return std::get<Position>(param_); }

  friend bool operator==(const Query&, const Query&) = default;

private:
  Query(QueryOp op, std::vector<Query> children) : op_{op}, children_{std::move(children)} {}

  QueryOp op_;
  std::string text_;
  std::vector<Query> children_;
  std::variant<std::monostate, ContainmentMode, StrictMode, Position> param_;
};

/// Prefix rendering, e.g. Or(And(pease, porridge), hot).
std::ostream& operator<<(std::ostream& os, const Query& q);
std::string to_string(const Query& q);

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + what),
        position_{position} {}
  /// Byte offset into the query text.
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses the query language. Operators from tightest to loosest binding:
///
///   ++                     block (phrase concatenation)
///   <                      ordered meet
///   >> !>> << !<< >>> !>>> containment filters
///   WITHIN k               length filter
///   AND
///   MINUS
///   OR
///
/// All are left-associative; chains of AND / OR become a single n-ary node.
/// Terms are bare words or "quoted phrases", which become block chains.
/// Throws ParseError.
Query parse_query(std::string_view text);

/// The antichain a query denotes in one document.
Antichain evaluate(const Query& q, const Document& doc);
/// Throws std::out_of_range for unknown document ids.
Antichain evaluate(const Query& q, const PositionalIndex& index, std::string_view doc_id);

}  // namespace mis::ir
