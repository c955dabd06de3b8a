#include "folderol/proof_tree.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>

#include "folderol/syntax.hpp"

namespace folderol {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view label;
  int arity;
};

constexpr std::array<RuleInfo, 15> kRules{{
    {Rule::Basic, "basic", 0},
    {Rule::NotLeft, "~:left", 1},
    {Rule::NotRight, "~:right", 1},
    {Rule::AndLeft, "&:left", 1},
    {Rule::AndRight, "&:right", 2},
    {Rule::OrLeft, "|:left", 2},
    {Rule::OrRight, "|:right", 1},
    {Rule::ImpLeft, "-->:left", 2},
    {Rule::ImpRight, "-->:right", 1},
    {Rule::IffLeft, "<->:left", 2},
    {Rule::IffRight, "<->:right", 2},
    {Rule::AllLeft, "ALL:left", 1},
    {Rule::AllRight, "ALL:right", 1},
    {Rule::ExistsLeft, "EXISTS:left", 1},
    {Rule::ExistsRight, "EXISTS:right", 1},
}};

const RuleInfo& info(Rule r) {
  return *std::find_if(kRules.begin(), kRules.end(), [&](const RuleInfo& i) { return i.rule == r; });
}

void quote(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

void write_tree(std::string& out, const ProofTree& t, int depth) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += '(';
  out += rule_label(t.rule);
  out += " [";
  const PrintOptions opts{true};
  for (const Formula& a : t.sequent.left) {
    quote(out, unparse(a, opts));
    out += ' ';
  }
  out += "|-";
  for (const Formula& b : t.sequent.right) {
    out += ' ';
    quote(out, unparse(b, opts));
  }
  out += ']';
  if (t.witness) {
    out += " [";
    quote(out, unparse(*t.witness));
    out += ']';
  }
  for (const ProofTree& p : t.premises) {
    out += '\n';
    write_tree(out, p, depth + 1);
  }
  out += ')';
}

struct Tok {
  enum class Kind { Open, Close, LBracket, RBracket, String, Word, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) { advance(); }

  ProofTree tree() {
    expect(Tok::Kind::Open, "'('");
    if (tok_.kind != Tok::Kind::Word) fail("rule name expected");
    auto rule = rule_from_label(tok_.text);
    if (!rule) fail("unknown rule '" + tok_.text + "'");
    advance();

    ProofTree t;
    t.rule = *rule;
    expect(Tok::Kind::LBracket, "'[' opening the sequent");
    t.sequent = sequent();
    if (tok_.kind == Tok::Kind::LBracket) {
      advance();
      if (tok_.kind != Tok::Kind::String) fail("quoted witness expected");
      t.witness = read_term(tok_.text);
      advance();
      expect(Tok::Kind::RBracket, "']' closing the witness");
    }
    while (tok_.kind == Tok::Kind::Open) t.premises.push_back(tree());
    expect(Tok::Kind::Close, "')'");
    return t;
  }

  void finish() {
    if (tok_.kind != Tok::Kind::End) fail("trailing text after proof tree");
  }

 private:
  Sequent sequent() {
    Sequent s;
    while (tok_.kind == Tok::Kind::String) {
      s.left.push_back(read_formula(tok_.text));
      advance();
    }
    if (tok_.kind != Tok::Kind::Word || tok_.text != "|-") fail("'|-' expected in sequent");
    advance();
    while (tok_.kind == Tok::Kind::String) {
      s.right.push_back(read_formula(tok_.text));
      advance();
    }
    expect(Tok::Kind::RBracket, "']' closing the sequent");
    return s;
  }

  Formula read_formula(const std::string& s) {
    try {
      return parse(s);
    } catch (const SyntaxError& e) {
      fail(std::string("bad formula \"") + s + "\": " + e.what());
    }
  }

  Term read_term(const std::string& s) {
    try {
      return parse_term(s);
    } catch (const SyntaxError& e) {
      fail(std::string("bad witness \"") + s + "\": " + e.what());
    }
  }

  void expect(Tok::Kind k, const std::string& what) {
    if (tok_.kind != k) fail(what + " expected");
    advance();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ProofFormatError("offset " + std::to_string(tok_.offset) + ": " + msg);
  }

  static bool is_delimiter(char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '[' || c == ']' || c == '"';
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.offset = pos_;
    tok_.text.clear();
    if (pos_ == text_.size()) {
      tok_.kind = Tok::Kind::End;
      return;
    }
    const char c = text_[pos_];
    switch (c) {
      case '(': tok_.kind = Tok::Kind::Open; ++pos_; return;
      case ')': tok_.kind = Tok::Kind::Close; ++pos_; return;
      case '[': tok_.kind = Tok::Kind::LBracket; ++pos_; return;
      case ']': tok_.kind = Tok::Kind::RBracket; ++pos_; return;
      case '"': {
        ++pos_;
        while (true) {
          if (pos_ == text_.size()) fail("unterminated string");
          char d = text_[pos_++];
          if (d == '"') break;
          if (d == '\\') {
            if (pos_ == text_.size()) fail("unterminated string");
            d = text_[pos_++];
          }
          tok_.text += d;
        }
        tok_.kind = Tok::Kind::String;
        return;
      }
      default:
        while (pos_ < text_.size() && !is_delimiter(text_[pos_])) tok_.text += text_[pos_++];
        tok_.kind = Tok::Kind::Word;
        return;
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Tok tok_{Tok::Kind::End, {}, 0};
};

}  // namespace

std::string_view rule_label(Rule r) noexcept { return info(r).label; }

std::optional<Rule> rule_from_label(std::string_view label) {
  for (const RuleInfo& i : kRules)
    if (i.label == label) return i.rule;
  return std::nullopt;
}

int rule_arity(Rule r) noexcept { return info(r).arity; }

const std::vector<Rule>& all_rules() {
  static const std::vector<Rule> rules = [] {
    std::vector<Rule> out;
    for (const RuleInfo& i : kRules) out.push_back(i.rule);
    return out;
  }();
  return rules;
}

std::size_t ProofTree::size() const {
  std::size_t n = 1;
  for (const ProofTree& p : premises) n += p.size();
  return n;
}

std::size_t ProofTree::height() const {
  std::size_t h = 0;
  for (const ProofTree& p : premises) h = std::max(h, p.height());
  return h + 1;
}

std::string serialize(const ProofTree& tree) {
  std::string out;
  write_tree(out, tree, 0);
  out += '\n';
  return out;
}

ProofTree deserialize(std::string_view text) {
  Reader r(text);
  ProofTree t = r.tree();
  r.finish();
  return t;
}

}  // namespace folderol
