#include "mis/ir/tokenizer.hpp"

namespace mis::ir {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i])) {
      ++i;
      continue;
    }
    std::string term;
    for (; i < text.size() && is_word_char(text[i]); ++i) {
      const char c = text[i];
      term.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    }
    tokens.push_back({std::move(term), static_cast<Position>(tokens.size())});
  }
  return tokens;
}

}  // namespace mis::ir
