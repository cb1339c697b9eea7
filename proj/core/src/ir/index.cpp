#include "mis/ir/index.hpp"

#include <json.hpp>

#include "mis/ir/tokenizer.hpp"

namespace mis::ir {

namespace {

void validate(const std::string& id, const Document& doc) {
  if (doc.length < 0) throw std::invalid_argument("document " + id + " has negative length");
  for (const auto& [term, positions] : doc.postings) {
    if (positions.empty()) {
      throw std::invalid_argument("document " + id + ": term '" + term + "' has no positions");
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] < 0 || positions[i] >= doc.length) {
        throw std::invalid_argument("document " + id + ": position " +
                                    std::to_string(positions[i]) + " of '" + term +
                                    "' is out of range");
      }
      if (i > 0 && positions[i - 1] >= positions[i]) {
        throw std::invalid_argument("document " + id + ": positions of '" + term +
                                    "' are not strictly increasing");
      }
    }
  }
}

}  // namespace

Antichain Document::occurrences(std::string_view term) const {
  auto it = postings.find(term);
  if (it == postings.end()) return {};
  std::vector<Interval> points;
  points.reserve(it->second.size());
  for (Position p : it->second) points.push_back(Interval::point(p));
  return Antichain::from_sorted(std::move(points));
}

PositionalIndex PositionalIndex::build(std::span<const std::pair<std::string, std::string>> docs) {
  PositionalIndex index;
  for (const auto& [id, text] : docs) {
    Document doc;
    const auto tokens = tokenize(text);
    doc.length = static_cast<Position>(tokens.size());
    for (const auto& token : tokens) doc.postings[token.term].push_back(token.position);
    if (!index.docs_.emplace(id, std::move(doc)).second) {
      throw std::invalid_argument("duplicate document id '" + id + "'");
    }
  }
  return index;
}

PositionalIndex PositionalIndex::from_documents(DocumentMap docs) {
  for (const auto& [id, doc] : docs) validate(id, doc);
  PositionalIndex index;
  index.docs_ = std::move(docs);
  return index;
}

const Document& PositionalIndex::document(std::string_view id) const {
  auto it = docs_.find(id);
  if (it == docs_.end()) throw std::out_of_range("unknown document '" + std::string(id) + "'");
  return it->second;
}

void PositionalIndex::write_jsonl(std::ostream& out) const {
  for (const auto& [id, doc] : docs_) {
    nlohmann::json postings = nlohmann::json::object();
    for (const auto& [term, positions] : doc.postings) postings[term] = positions;
    const nlohmann::json line = {{"doc", id}, {"length", doc.length}, {"postings", postings}};
    out << line.dump() << '\n';
  }
}

PositionalIndex PositionalIndex::read_jsonl(std::istream& in) {
  DocumentMap docs;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto line = nlohmann::json::parse(text);
      const auto id = line.at("doc").get<std::string>();
      Document doc;
      doc.length = line.at("length").get<Position>();
      for (const auto& [term, positions] : line.at("postings").items()) {
        doc.postings.emplace(term, positions.get<std::vector<Position>>());
      }
      validate(id, doc);
      if (!docs.emplace(id, std::move(doc)).second) {
        throw std::invalid_argument("duplicate document id '" + id + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw IndexFormatError(line_no, e.what());
    } catch (const std::invalid_argument& e) {
      throw IndexFormatError(line_no, e.what());
    }
  }
  PositionalIndex index;
  index.docs_ = std::move(docs);
  return index;
}

PositionalIndex build_index(std::span<const std::pair<std::string, std::string>> docs) {
  return PositionalIndex::build(docs);
}

}  // namespace mis::ir
