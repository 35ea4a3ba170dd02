#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace teddy {

enum class TokenKind {
  Identifier,
  Keyword,
  NumberLiteral,
  StringLiteral,
  Operator,
  Punctuation,
  Newline,
};

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;    // 1-based
  int column = 1;  // 1-based
};

/// Tokenizes Python source text. Comments are dropped, string literals
/// (including triple-quoted and prefixed forms) are single tokens, and
/// indentation is not tokenized. One Newline token (text "\n") is emitted per
/// physical line break outside string literals; backslash-newline continues
/// the logical line without a token. The input does not have to be valid
/// Python. Throws LexError for an unterminated string literal.
std::vector<Token> tokenize(std::string_view source);

/// True if `word` is a Python 3 keyword (including True/False/None).
bool is_python_keyword(std::string_view word);

const char* token_kind_name(TokenKind kind);

}  // namespace teddy
