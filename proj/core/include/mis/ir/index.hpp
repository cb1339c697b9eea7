#pragma once

#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mis/antichain.hpp"

namespace mis::ir {

/// Positions of each term in one document.
struct Document {
  Position length = 0;
  /// term -> strictly increasing, nonempty positions in [0, length).
  std::map<std::string, std::vector<Position>, std::less<>> postings;

  /// The singleton intervals of a term's occurrences; 0 for absent terms.
  Antichain occurrences(std::string_view term) const;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Raised when an index file is malformed; carries the 1-based line number.
class IndexFormatError : public std::runtime_error {
public:
  IndexFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("index line " + std::to_string(line) + ": " + what), line_{line} {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Term positions per document, keyed by document id. Immutable after build.
class PositionalIndex {
public:
  using DocumentMap = std::map<std::string, Document, std::less<>>;

  PositionalIndex() = default;

  /// Tokenizes each (id, text) pair. Throws std::invalid_argument on a
  /// repeated id.
  static PositionalIndex build(std::span<const std::pair<std::string, std::string>> docs);
  /// Adopts prebuilt documents after checking their invariants.
  static PositionalIndex from_documents(DocumentMap docs);

  const DocumentMap& documents() const { return docs_; }
  std::size_t size() const { return docs_.size(); }
  bool empty() const { return docs_.empty(); }
  /// Throws std::out_of_range for unknown ids.
  const Document& document(std::string_view id) const;
  bool contains(std::string_view id) const { return docs_.find(id) != docs_.end(); }

  /// One JSON object per line:
  /// {"doc": id, "length": n, "postings": {term: [positions...]}}.
  void write_jsonl(std::ostream& out) const;
  /// Inverse of write_jsonl. Blank lines are ignored.
  static PositionalIndex read_jsonl(std::istream& in);

  friend bool operator==(const PositionalIndex&, const PositionalIndex&) = default;

private:
  DocumentMap docs_;
};

/// PositionalIndex::build as a free function.
PositionalIndex build_index(std::span<const std::pair<std::string, std::string>> docs);

}  // namespace mis::ir
