#include "folderol/syntax.hpp"

#include <algorithm>
#include <cstddef>

namespace folderol {

namespace {

bool is_letter_or_digit(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

// Infix precedence; -1 when the key is not an infix operator.
int infix_precedence(std::string_view key) {
  if (key == "&") return precedence(Connective::And);
  if (key == "|") return precedence(Connective::Or);
  if (key == "<->") return precedence(Connective::Iff);
  if (key == "-->") return precedence(Connective::Implies);
  return -1;
}

Connective infix_connective(std::string_view key) {
  if (key == "&") return Connective::And;
  if (key == "|") return Connective::Or;
  if (key == "<->") return Connective::Iff;
  return Connective::Implies;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula formula() {
    if (at_key(0, "ALL") || at_key(0, "EXISTS")) {
      if (at_id(1) && at_key(2, ".")) {
        const Quantifier q = toks_[pos_].text == "ALL" ? Quantifier::All : Quantifier::Exists;
        std::string name = toks_[pos_ + 1].text;
        pos_ += 3;
        Formula body = formula();
        Formula abstracted = abstract(Term::constant(name), body);
        return Formula::quant(q, std::move(name), std::move(abstracted));
      }
    }
    return infix(0, atom());
  }

  Term term() {
    if (at_id(0)) {
      std::string name = toks_[pos_++].text;
      if (!at_key(0, "(")) return Term::constant(std::move(name));
      ++pos_;
      std::vector<Term> args = term_list();
      right_paren();
      return Term::fun(std::move(name), std::move(args));
    }
    if (at_key(0, "?") && at_id(1)) {
      pos_ += 2;
      return Term::var(toks_[pos_ - 1].text);
    }
    throw SyntaxError("Syntax of term");
  }

  void finish() const {
    if (pos_ != toks_.size()) throw SyntaxError("Extra characters in formula");
  }

 private:
  bool at_key(std::size_t ahead, std::string_view k) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() && toks_[i].kind == Token::Kind::Key && toks_[i].text == k;
  }
  bool at_id(std::size_t ahead) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() && toks_[i].kind == Token::Kind::Id;
  }

  // Stops at an operator binding less tightly than the one to the left.
  Formula infix(int prec, Formula lhs) {
    while (pos_ < toks_.size() && toks_[pos_].kind == Token::Kind::Key) {
      const std::string& key = toks_[pos_].text;
      const int p = infix_precedence(key);
      if (p < prec) break;
      const Connective c = infix_connective(key);
      ++pos_;
      Formula rhs = infix(p, atom());
      lhs = Formula::binary(c, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula atom() {
    if (at_key(0, "~")) {
      ++pos_;
      return Formula::negation(atom());
    }
    if (at_key(0, "(")) {
      ++pos_;
      Formula a = formula();
      right_paren();
      return a;
    }
    if (at_id(0)) {
      std::string name = toks_[pos_++].text;
      if (!at_key(0, "(")) return Formula::pred(std::move(name));
      ++pos_;
      std::vector<Term> args = term_list();
      right_paren();
      return Formula::pred(std::move(name), std::move(args));
    }
    throw SyntaxError("Syntax of formula");
  }

  std::vector<Term> term_list() {
    std::vector<Term> ts;
    ts.push_back(term());
    while (at_key(0, ",")) {
      ++pos_;
      ts.push_back(term());
    }
    return ts;
  }

  void right_paren() {
    if (!at_key(0, ")")) throw SyntaxError("Symbol ) expected");
    ++pos_;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void append_args(std::string& out, const std::vector<Term>& ts) {
  if (ts.empty()) return;
  out += '(';
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (i > 0) out += ',';
    out += unparse(ts[i]);
  }
  out += ')';
}

bool term_mentions(const Term& t, const std::string& name) {
  if ((t.is_param() || t.is_constant()) && t.name() == name) return true;
  return std::any_of(t.args().begin(), t.args().end(), [&](const Term& u) { return term_mentions(u, name); });
}

bool mentions(const Formula& a, const std::string& name) {
  switch (a.kind()) {
    case Formula::Kind::Pred:
      return std::any_of(a.args().begin(), a.args().end(), [&](const Term& t) { return term_mentions(t, name); });
    case Formula::Kind::Conn:
      return std::any_of(a.operands().begin(), a.operands().end(),
                         [&](const Formula& b) { return mentions(b, name); });
    case Formula::Kind::Quant:
      return mentions(a.body(), name);
  }
  return false;
}

std::string printable_name(const Formula& quant, const PrintOptions& options) {
  if (!options.avoid_capture || !mentions(quant.body(), quant.name())) return quant.name();
  for (int suffix = 1;; ++suffix) {
    std::string candidate = quant.name() + std::to_string(suffix);
    if (!mentions(quant.body(), candidate)) return candidate;
  }
}

void print_formula(std::string& out, int prec, const Formula& a, const PrintOptions& options) {
  switch (a.kind()) {
    case Formula::Kind::Pred:
      out += a.name();
      append_args(out, a.args());
      return;
    case Formula::Kind::Conn: {
      const Connective c = a.connective();
      if (c == Connective::Not) {
        out += '~';
        print_formula(out, precedence(Connective::Not), a.operands()[0], options);
        return;
      }
      const int p = precedence(c);
      const bool parens = p <= prec;
      if (parens) out += '(';
      const int inner = std::max(p, prec);
      print_formula(out, inner, a.operands()[0], options);
      out += ' ';
      out += symbol(c);
      out += ' ';
      print_formula(out, inner, a.operands()[1], options);
      if (parens) out += ')';
      return;
    }
    case Formula::Kind::Quant: {
      const std::string name = printable_name(a, options);
      const bool parens = prec > 0;
      if (parens) out += '(';
      out += symbol(a.quantifier());
      out += ' ';
      out += name;
      out += ". ";
      print_formula(out, 0, subst_bound(Term::constant(name), a.body()), options);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::vector<Token> scan(std::string_view input) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < input.size()) {
    const char c = input[i];
    if (input.substr(i, 3) == "-->" || input.substr(i, 3) == "<->") {
      toks.push_back(Token::key(std::string(input.substr(i, 3))));
      i += 3;
    } else if (c == ' ' || c == '\t' || c == '\n') {
      ++i;
    } else if (is_letter_or_digit(c)) {
      std::size_t j = i;
      while (j < input.size() && is_letter_or_digit(input[j])) ++j;
      std::string word(input.substr(i, j - i));
      toks.push_back(word == "ALL" || word == "EXISTS" ? Token::key(std::move(word)) : Token::id(std::move(word)));
      i = j;
    } else {
      toks.push_back(Token::key(std::string(1, c)));
      ++i;
    }
  }
  return toks;
}

Formula parse(std::string_view input) {
  Parser p(scan(input));
  Formula a = p.formula();
  p.finish();
  return a;
}

Term parse_term(std::string_view input) {
  Parser p(scan(input));
  Term t = p.term();
  p.finish();
  return t;
}

std::string unparse(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Param:
      return t.name();
    case Term::Kind::Var:
      return "?" + t.name();
    case Term::Kind::Bound:
      return "B." + std::to_string(t.index());
    case Term::Kind::Fun: {
      std::string out = t.name();
      append_args(out, t.args());
      return out;
    }
  }
  return {};
}

std::string unparse(const Formula& a, PrintOptions options) {
  std::string out;
  print_formula(out, 0, a, options);
  return out;
}

}  // namespace folderol
