#pragma once

#include <string>
#include <vector>

#include "teddy/token.hpp"

namespace teddy {

inline constexpr int kRepresentationLevels = 4;

/// The four normalized token-text sequences used for multi-level matching:
///   r0 — verbatim token texts, line breaks kept as "\n" entries
///   r1 — r0 with line-break tokens removed (layout-free)
///   r2 — r1 with every identifier replaced by "ID"
///   r3 — r2 with every number/string literal replaced by "LIT"
/// Keywords are never abstracted at any level.
struct RepresentationSet {
  std::vector<std::string> r0;
  std::vector<std::string> r1;
  std::vector<std::string> r2;
  std::vector<std::string> r3;

  const std::vector<std::string>& level(int i) const {
    switch (i) {
      case 0: return r0;
      case 1: return r1;
      case 2: return r2;
      default: return r3;
    }
  }
};

inline constexpr const char* kIdentifierPlaceholder = "ID";
inline constexpr const char* kLiteralPlaceholder = "LIT";

RepresentationSet representations(const std::vector<Token>& tokens);

}  // namespace teddy
