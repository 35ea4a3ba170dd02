#include "teddy/token.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "teddy/error.hpp"

namespace teddy {

namespace {

constexpr std::array<std::string_view, 35> kKeywords = {
    "False",  "None",     "True",   "and",    "as",     "assert", "async",
    "await",  "break",    "class",  "continue", "def",  "del",    "elif",
    "else",   "except",   "finally", "for",   "from",   "global", "if",
    "import", "in",       "is",     "lambda", "nonlocal", "not",  "or",
    "pass",   "raise",    "return", "try",    "while",  "with",   "yield",
};

// Multi-character operators first so longest-match wins.
constexpr std::array<std::string_view, 26> kOperators = {
    "**=", "//=", ">>=", "<<=", "...", "==", "!=", "<=", ">=", "->",
    ":=",  "+=",  "-=",  "*=",  "/=", "%=", "@=", "&=", "|=", "^=",
    "**",  "//",  "<<",  ">>",  "<",  ">",
};

constexpr std::string_view kSingleOperators = "+-*/%@&|^~<>=";
constexpr std::string_view kPunctuation = "()[]{},:.;";

bool is_identifier_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
         static_cast<unsigned char>(c) >= 0x80;
}

bool is_identifier_char(char c) {
  return is_identifier_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

bool is_string_prefix(std::string_view word) {
  if (word.empty() || word.size() > 2) return false;
  for (char c : word) {
    char l = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (l != 'r' && l != 'b' && l != 'u' && l != 'f') return false;
  }
  return true;
}

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\r') {
        // Treat \r\n as one line break; a lone \r likewise.
        int line = line_, col = col_;
        advance();
        if (pos_ < src_.size() && src_[pos_] == '\n') advance();
        tokens.push_back({TokenKind::Newline, "\n", line, col});
        continue;
      }
      if (c == '\n') {
        tokens.push_back({TokenKind::Newline, "\n", line_, col_});
        advance();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\f' || c == '\v') {
        advance();
        continue;
      }
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r')
          advance();
        continue;
      }
      if (c == '\\' && pos_ + 1 < src_.size() &&
          (src_[pos_ + 1] == '\n' || src_[pos_ + 1] == '\r')) {
        advance();  // consume backslash
        if (src_[pos_] == '\r') advance();
        if (pos_ < src_.size() && src_[pos_] == '\n') advance();
        continue;
      }
      if (c == '\'' || c == '"') {
        tokens.push_back(lex_string(pos_));
        continue;
      }
      if (is_identifier_start(c)) {
        tokens.push_back(lex_word());
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '.' && pos_ + 1 < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        tokens.push_back(lex_number());
        continue;
      }
      if (Token op; try_lex_operator(op)) {
        tokens.push_back(op);
        continue;
      }
      // Anything unrecognized (stray backslash, '$', ...) becomes punctuation
      // so tokenization stays total on arbitrary text.
      tokens.push_back({TokenKind::Punctuation, std::string(1, c), line_, col_});
      advance();
    }
    return tokens;
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token lex_word() {
    int line = line_, col = col_;
    size_t start = pos_;
    while (pos_ < src_.size() && is_identifier_char(src_[pos_])) advance();
    std::string_view word = src_.substr(start, pos_ - start);
    // A string prefix glued to a quote forms a single string token.
    if (pos_ < src_.size() && (src_[pos_] == '\'' || src_[pos_] == '"') &&
        is_string_prefix(word)) {
      return lex_string(start, line, col);
    }
    TokenKind kind =
        is_python_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier;
    return {kind, std::string(word), line, col};
  }

  Token lex_string(size_t start) { return lex_string(start, line_, col_); }

  // `start` points at the prefix (if any); pos_ points at the opening quote.
  Token lex_string(size_t start, int line, int col) {
    char quote = src_[pos_];
    advance();
    bool triple = false;
    if (pos_ + 1 < src_.size() && src_[pos_] == quote &&
        src_[pos_ + 1] == quote) {
      triple = true;
      advance();
      advance();
    }
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\\' && pos_ + 1 < src_.size()) {
        advance();
        if (src_[pos_] == '\r') {
          advance();
          if (pos_ < src_.size() && src_[pos_] == '\n') advance();
        } else {
          advance();
        }
        continue;
      }
      if (!triple && (c == '\n' || c == '\r')) break;
      if (c == quote) {
        if (!triple) {
          advance();
          return {TokenKind::StringLiteral,
                  std::string(src_.substr(start, pos_ - start)), line, col};
        }
        if (pos_ + 2 < src_.size() && src_[pos_ + 1] == quote &&
            src_[pos_ + 2] == quote) {
          advance();
          advance();
          advance();
          return {TokenKind::StringLiteral,
                  std::string(src_.substr(start, pos_ - start)), line, col};
        }
      }
      advance();
    }
    throw LexError("unterminated string literal", line, col);
  }

  Token lex_number() {
    int line = line_, col = col_;
    size_t start = pos_;
    bool is_hex = false;
    if (src_[pos_] == '0' && pos_ + 1 < src_.size() &&
        (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'X')) {
      is_hex = true;
    }
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
        advance();
        continue;
      }
      // Exponent sign: 1e+5, 2.5E-3 (not in hex literals).
      if ((c == '+' || c == '-') && !is_hex && pos_ > start) {
        char prev = src_[pos_ - 1];
        if ((prev == 'e' || prev == 'E') && pos_ + 1 < src_.size() &&
            std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
          advance();
          continue;
        }
      }
      break;
    }
    return {TokenKind::NumberLiteral, std::string(src_.substr(start, pos_ - start)),
            line, col};
  }

  bool try_lex_operator(Token& out) {
    for (std::string_view op : kOperators) {
      if (src_.substr(pos_).starts_with(op)) {
        out = {TokenKind::Operator, std::string(op), line_, col_};
        for (size_t i = 0; i < op.size(); ++i) advance();
        return true;
      }
    }
    char c = src_[pos_];
    if (kSingleOperators.find(c) != std::string_view::npos) {
      out = {TokenKind::Operator, std::string(1, c), line_, col_};
      advance();
      return true;
    }
    if (kPunctuation.find(c) != std::string_view::npos) {
      out = {TokenKind::Punctuation, std::string(1, c), line_, col_};
      advance();
      return true;
    }
    return false;
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bool is_python_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source) {
  if (source.starts_with("\xEF\xBB\xBF")) source.remove_prefix(3);
  return Lexer(source).run();
}

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::NumberLiteral: return "number-literal";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Newline: return "newline";
  }
  return "unknown";
}

}  // namespace teddy
