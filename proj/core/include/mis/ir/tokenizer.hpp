#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mis/interval.hpp"

namespace mis::ir {

struct Token {
  std::string term;
  Position position;

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits text into lowercased maximal runs of ASCII letters and digits,
/// numbering them 0, 1, 2, ... in order of occurrence. Everything else,
/// including bytes outside ASCII, separates words.
std::vector<Token> tokenize(std::string_view text);

/// True for the characters that make up words.
inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

}  // namespace mis::ir
