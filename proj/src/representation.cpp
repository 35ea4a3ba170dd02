#include "teddy/representation.hpp"

namespace teddy {

RepresentationSet representations(const std::vector<Token>& tokens) {
  RepresentationSet reps;
  reps.r0.reserve(tokens.size());
  for (const Token& tok : tokens) {
    reps.r0.push_back(tok.text);
    if (tok.kind == TokenKind::Newline) continue;
    reps.r1.push_back(tok.text);
    reps.r2.push_back(tok.kind == TokenKind::Identifier ? kIdentifierPlaceholder
                                                        : tok.text);
    bool literal = tok.kind == TokenKind::NumberLiteral ||
                   tok.kind == TokenKind::StringLiteral;
    reps.r3.push_back(literal ? kLiteralPlaceholder : reps.r2.back());
  }
  return reps;
}

}  // namespace teddy
