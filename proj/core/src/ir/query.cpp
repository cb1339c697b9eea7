#include "mis/ir/query.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

#include "mis/ir/tokenizer.hpp"

namespace mis::ir {

// Query construction

Query Query::term(std::string text) {
  if (text.empty()) throw std::invalid_argument("empty term");
  Query q(QueryOp::term, {});
  q.text_ = std::move(text);
  return q;
}

Query Query::any_of(std::vector<Query> children) {
  if (children.size() < 2) throw std::invalid_argument("OR needs at least two operands");
  return Query(QueryOp::any_of, std::move(children));
}

Query Query::all_of(std::vector<Query> children) {
  if (children.size() < 2) throw std::invalid_argument("AND needs at least two operands");
  return Query(QueryOp::all_of, std::move(children));
}

Query Query::ordered(Query left, Query right) {
  return Query(QueryOp::ordered, {std::move(left), std::move(right)});
}

Query Query::block(Query left, Query right) {
  return Query(QueryOp::block, {std::move(left), std::move(right)});
}

Query Query::containment(Query left, Query right, ContainmentMode mode) {
  Query q(QueryOp::containment, {std::move(left), std::move(right)});
  q.param_ = mode;
  return q;
}

Query Query::strict(Query left, Query right, StrictMode mode) {
  Query q(QueryOp::strict, {std::move(left), std::move(right)});
  q.param_ = mode;
  return q;
}

Query Query::minus(Query left, Query right) {
  return Query(QueryOp::minus, {std::move(left), std::move(right)});
}

Query Query::within(Query child, Position k) {
  if (k < 1) throw std::invalid_argument("WITHIN needs a positive window");
  Query q(QueryOp::within, {std::move(child)});
  q.param_ = k;
  return q;
}

std::ostream& operator<<(std::ostream& os, const Query& q) {
  auto list = [&](std::string_view name) -> std::ostream& {
    os << name << '(';
    const char* sep = "";
    for (const auto& c : q.children()) {
      os << sep << c;
      sep = ", ";
    }
    return os;
  };
  switch (q.op()) {
    case QueryOp::term: return os << q.text();
    case QueryOp::any_of: return list("Or") << ')';
    case QueryOp::all_of: return list("And") << ')';
    case QueryOp::ordered: return list("Ordered") << ')';
    case QueryOp::block: return list("Block") << ')';
    case QueryOp::minus: return list("Minus") << ')';
    case QueryOp::containment: return list(to_string(q.containment_mode())) << ')';
    case QueryOp::strict: return list(to_string(q.strict_mode())) << ')';
    case QueryOp::within: return list("Within") << ", " << q.window() << ')';
  }
  return os;
}

std::string to_string(const Query& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Parsing

namespace {

enum class Lexeme { lparen, rparen, word, phrase, op, end };

struct Symbol {
  Lexeme kind;
  std::string_view text;  // word, phrase body or operator spelling
  std::size_t position;
};

class Lexer {
public:
  explicit Lexer(std::string_view input) : input_{input} {}

  Symbol next() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == input_.size()) return {Lexeme::end, {}, start};
    const char c = input_[pos_];
    if (c == '(') return advance(Lexeme::lparen, 1);
    if (c == ')') return advance(Lexeme::rparen, 1);
    if (c == '"') {
      const auto close = input_.find('"', pos_ + 1);
      if (close == std::string_view::npos) throw ParseError(start, "unterminated phrase");
      pos_ = close + 1;
      return {Lexeme::phrase, input_.substr(start + 1, close - start - 1), start};
    }
    if (is_word_char(c)) {
      std::size_t end = pos_;
      while (end < input_.size() && is_word_char(input_[end])) ++end;
      return advance(Lexeme::word, end - pos_);
    }
    for (std::string_view spelling : {"!>>>", ">>>", "!>>", "!<<", ">>", "<<", "++", "<"}) {
      if (input_.substr(pos_).starts_with(spelling)) return advance(Lexeme::op, spelling.size());
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

private:
  Symbol advance(Lexeme kind, std::size_t length) {
    Symbol s{kind, input_.substr(pos_, length), pos_};
    pos_ += length;
    return s;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
};

bool is_keyword(std::string_view word) {
  return word == "AND" || word == "OR" || word == "MINUS" || word == "WITHIN";
}

class Parser {
public:
  explicit Parser(std::string_view input) : lexer_{input} { current_ = lexer_.next(); }

  Query parse() {
    Query q = parse_or();
    if (current_.kind != Lexeme::end) fail("unexpected '" + std::string(current_.text) + "'");
    return q;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(current_.position, what); }

  void shift() { current_ = lexer_.next(); }

  bool at_keyword(std::string_view kw) const {
    return current_.kind == Lexeme::word && current_.text == kw;
  }

  bool at_op(std::string_view spelling) const {
    return current_.kind == Lexeme::op && current_.text == spelling;
  }

  template <class Next>
  Query parse_nary(std::string_view keyword, Next next, Query (*make)(std::vector<Query>)) {
    std::vector<Query> operands{(this->*next)()};
    while (at_keyword(keyword)) {
      shift();
      operands.push_back((this->*next)());
    }
    return operands.size() == 1 ? std::move(operands.front()) : make(std::move(operands));
  }

  Query parse_or() { return parse_nary("OR", &Parser::parse_minus, &Query::any_of); }

  Query parse_minus() {
    Query q = parse_and();
    while (at_keyword("MINUS")) {
      shift();
      q = Query::minus(std::move(q), parse_and());
    }
    return q;
  }

  Query parse_and() { return parse_nary("AND", &Parser::parse_within, &Query::all_of); }

  Query parse_within() {
    Query q = parse_containment();
    while (at_keyword("WITHIN")) {
      shift();
      if (current_.kind != Lexeme::word) fail("WITHIN expects a number");
      Position k = 0;
      const auto text = current_.text;
      const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
      if (ec != std::errc{} || end != text.data() + text.size()) fail("WITHIN expects a number");
      if (k < 1) fail("WITHIN expects a positive number");
      shift();
      q = Query::within(std::move(q), k);
    }
    return q;
  }

  Query parse_containment() {
    Query q = parse_ordered();
    for (;;) {
      std::optional<ContainmentMode> mode;
      std::optional<StrictMode> strict;
      if (at_op(">>")) mode = ContainmentMode::containing;
      else if (at_op("!>>")) mode = ContainmentMode::not_containing;
      else if (at_op("<<")) mode = ContainmentMode::contained_in;
      else if (at_op("!<<")) mode = ContainmentMode::not_contained_in;
      else if (at_op(">>>")) strict = StrictMode::strictly_containing;
      else if (at_op("!>>>")) strict = StrictMode::not_strictly_containing;
      else return q;
      shift();
      Query rhs = parse_ordered();
      q = mode ? Query::containment(std::move(q), std::move(rhs), *mode)
               : Query::strict(std::move(q), std::move(rhs), *strict);
    }
  }

  Query parse_ordered() {
    Query q = parse_block();
    while (at_op("<")) {
      shift();
      q = Query::ordered(std::move(q), parse_block());
    }
    return q;
  }

  Query parse_block() {
    Query q = parse_primary();
    while (at_op("++")) {
      shift();
      q = Query::block(std::move(q), parse_primary());
    }
    return q;
  }

  Query parse_primary() {
    switch (current_.kind) {
      case Lexeme::lparen: {
        shift();
        Query q = parse_or();
        if (current_.kind != Lexeme::rparen) fail("expected ')'");
        shift();
        return q;
      }
      case Lexeme::word: {
        if (is_keyword(current_.text)) fail("expected a term before " + std::string(current_.text));
        Query q = Query::term(tokenize(current_.text).front().term);
        shift();
        return q;
      }
      case Lexeme::phrase: {
        const auto tokens = tokenize(current_.text);
        if (tokens.empty()) fail("empty phrase");
        Query q = Query::term(tokens.front().term);
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          q = Query::block(std::move(q), Query::term(tokens[i].term));
        }
        shift();
        return q;
      }
      case Lexeme::end:
        fail("unexpected end of query");
      default:
        fail("expected a term, phrase or '('");
    }
  }

  Lexer lexer_;
  Symbol current_{Lexeme::end, {}, 0};
};

}  // namespace

Query parse_query(std::string_view text) { return Parser(text).parse(); }

// Evaluation

Antichain evaluate(const Query& q, const Document& doc) {
  const auto& kids = q.children();
  auto fold = [&](Antichain (*op)(const Antichain&, const Antichain&)) {
    Antichain acc = evaluate(kids.front(), doc);
    for (std::size_t i = 1; i < kids.size(); ++i) acc = op(acc, evaluate(kids[i], doc));
    return acc;
  };
  switch (q.op()) {
    case QueryOp::term: return doc.occurrences(q.text());
    case QueryOp::any_of: return fold(&join);
    case QueryOp::all_of: return fold(&meet);
    case QueryOp::ordered: return fold(&ordered_meet);
    case QueryOp::block: return fold(&block);
    case QueryOp::minus: return fold(&pseudo_difference);
    case QueryOp::containment:
      return filter_containment(evaluate(kids[0], doc), evaluate(kids[1], doc), q.containment_mode());
    case QueryOp::strict:
      return strict_containment(evaluate(kids[0], doc), evaluate(kids[1], doc), q.strict_mode());
    case QueryOp::within: {
      const Antichain inner = evaluate(kids[0], doc);
      if (inner.is_top()) return inner;
      std::vector<Interval> kept;
      std::copy_if(inner.begin(), inner.end(), std::back_inserter(kept),
                   [&](const Interval& iv) { return iv.length() <= q.window(); });
      return Antichain::from_sorted(std::move(kept));
    }
  }
  throw std::logic_error("unknown query node");
}

Antichain evaluate(const Query& q, const PositionalIndex& index, std::string_view doc_id) {
  return evaluate(q, index.document(doc_id));
}

}  // namespace mis::ir
