#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "folderol/term.hpp"

namespace folderol {

struct Token {
  enum class Kind { Key, Id };
  Kind kind;
  std::string text;

  static Token key(std::string s) { return {Kind::Key, std::move(s)}; }
  static Token id(std::string s) { return {Kind::Id, std::move(s)}; }

  friend bool operator==(const Token&, const Token&) = default;
};

class SyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Splits input into tokens. Identifiers are maximal runs of ASCII letters and
/// digits; ALL and EXISTS are keywords; --> and <-> are single keys; blanks,
/// tabs and newlines are skipped; any other character is a one-character key.
std::vector<Token> scan(std::string_view input);

/**
 * Reads a closed formula in ASCII syntax.
 *
 *   ~  &  |  <->  -->      decreasing precedence, infixes associate right
 *   ALL x. A  EXISTS x. A  scope extends as far right as possible
 *   ?a                     metavariable
 *   c  f(t1,...,tn)        constant / function application
 *
 * Throws SyntaxError ("Syntax of formula", "Syntax of term",
 * "Symbol ) expected", "Extra characters in formula").
 */
Formula parse(std::string_view input);

/// Reads a single term, e.g. a proof witness.
Term parse_term(std::string_view input);

struct PrintOptions {
  /// Rename a quantifier's display name when the body already mentions a
  /// constant or parameter of that name, so the output reads back as the
  /// same formula. Off by default: the plain printer reuses the stored name.
  bool avoid_capture = false;
};

std::string unparse(const Formula& a, PrintOptions options = {});
std::string unparse(const Term& t);

inline std::ostream& operator<<(std::ostream& os, const Formula& a) { return os << unparse(a); }
inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << unparse(t); }

}  // namespace folderol
