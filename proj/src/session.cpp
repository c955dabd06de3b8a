#include "folderol/session.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "folderol/checker.hpp"
#include "folderol/search.hpp"
#include "folderol/syntax.hpp"

namespace folderol {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_formulae(std::string_view side) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= side.size()) {
    std::size_t end = side.find(';', start);
    if (end == std::string_view::npos) end = side.size();
    std::string piece = trim(side.substr(start, end - start));
    if (!piece.empty()) out.push_back(std::move(piece));
    start = end + 1;
  }
  return out;
}

// Words separated by blanks; double quotes group, backslash escapes inside.
std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::string w;
    if (line[i] == '"') {
      ++i;
      while (i < line.size() && line[i] != '"') {
        if (line[i] == '\\' && i + 1 < line.size()) ++i;
        w += line[i++];
      }
      if (i == line.size()) throw SyntaxError("unterminated quoted argument");
      ++i;
    } else {
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') w += line[i++];
    }
    words.push_back(std::move(w));
  }
  return words;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  int n = 0;
  try {
    n = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw SyntaxError("number expected, found \"" + s + "\"");
  }
  if (used != s.size()) throw SyntaxError("number expected, found \"" + s + "\"");
  return n;
}

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const std::string& t : texts) {
    try {
      out.push_back(parse(t));
    } catch (const SyntaxError& e) {
      throw SyntaxError(std::string(e.what()) + " in \"" + t + "\"");
    }
  }
  return out;
}

}  // namespace

std::pair<std::vector<std::string>, std::vector<std::string>> split_sequent_text(std::string_view text) {
  const auto bar = text.find("|-");
  if (bar == std::string_view::npos) throw SyntaxError("sequent needs |-");
  if (text.find("|-", bar + 2) != std::string_view::npos) throw SyntaxError("sequent has more than one |-");
  return {split_formulae(text.substr(0, bar)), split_formulae(text.substr(bar + 2))};
}

Sequent parse_sequent(std::string_view text) {
  auto [l, r] = split_sequent_text(text);
  return Sequent{parse_all(l), parse_all(r)};
}

Session::Session(std::ostream& out, SessionOptions options)
    : out_(out), options_(options), engine_(options.prover) {}

int Session::read_goalseq(const std::vector<std::string>& left, const std::vector<std::string>& right) {
  std::vector<Formula> as;
  std::vector<Formula> bs;
  try {
    as = parse_all(left);
    bs = parse_all(right);
  } catch (const SyntaxError& e) {
    out_ << "Error: " << e.what() << "\n";
    return 2;
  }
  table_ = engine_.read_table(as, bs);
  history_.clear();
  out_ << format_table(table_);
  return 0;
}

int Session::read_goal(const std::string& formula) { return read_goalseq({}, {formula}); }

int Session::advance(int n, std::optional<std::size_t> cap) {
  RunResult r;
  try {
    r = engine_.proof_steps(
        n, table_, [this](const TraceEvent& e) { out_ << format_event(e) << "\n"; }, cap);
  } catch (const ProverError& e) {
    out_ << "Error: " << e.what() << "\n";
    return 1;
  }
  history_.insert(history_.end(), r.events.begin(), r.events.end());
  table_ = std::move(r.table);
  if (r.no_rules) out_ << "\n" << kNoRulesMessage << "\n";
  if (r.capped) out_ << "\nStopped after " << r.events.size() << " steps (step limit)\n";
  out_ << format_table(table_);
  return 0;
}

int Session::step() { return advance(1, std::nullopt); }

int Session::steps(int n) { return advance(n < 0 ? 0 : n, std::nullopt); }

int Session::run() { return advance(-1, options_.max_steps); }

int Session::fail_goal(int n, const std::string& formula) {
  if (int code = read_goal(formula); code != 0) return code;
  steps(n);
  if (table_.empty()) {
    out_ << "Error: This proof should have failed!\n";
    return 1;
  }
  out_ << "Failed, as expected\n";
  return 0;
}

int Session::prove(const std::string& sequent, std::optional<int> bound, const std::optional<std::string>& emit) {
  Sequent s;
  try {
    s = parse_sequent(sequent);
  } catch (const SyntaxError& e) {
    out_ << "Error: " << e.what() << "\n";
    return 2;
  }
  const int max_bound = bound.value_or(options_.default_bound);
  auto found = prove_deepening(s.left, s.right, max_bound);
  if (!found) {
    out_ << "No proof found with bound " << max_bound << "\n";
    return 1;
  }
  out_ << "Proved with bound " << found->bound << " (" << found->tree.size() << " nodes)\n";
  const std::string text = serialize(found->tree);
  if (emit) {
    std::ofstream file(*emit);
    if (!file) {
      out_ << "Error: cannot write " << *emit << "\n";
      return 2;
    }
    file << text;
    out_ << "Proof written to " << *emit << "\n";
  } else {
    out_ << text;
  }
  return 0;
}

int Session::check(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    out_ << "Error: cannot read " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << file.rdbuf();
  ProofTree tree;
  try {
    tree = deserialize(buf.str());
  } catch (const ProofFormatError& e) {
    out_ << "Error: malformed proof: " << e.what() << "\n";
    return 2;
  }
  CheckReport report = check_proof(tree);
  out_ << format_report(report);
  return report.accepted() ? 0 : 1;
}

int Session::script(const std::string& path) {
  if (script_depth_ > 16) {
    out_ << "Error: scripts nested too deeply\n";
    return 2;
  }
  std::ifstream file(path);
  if (!file) {
    out_ << "Error: cannot read " << path << "\n";
    return 2;
  }
  ++script_depth_;
  CommandResult r = run_script(file);
  --script_depth_;
  return r.code;
}

CommandResult Session::run_script(std::istream& in) {
  CommandResult last;
  std::string line;
  while (std::getline(in, line)) {
    CommandResult r = execute(line);
    if (r.code != 0) last.code = r.code;
    if (r.quit) {
      last.quit = true;
      break;
    }
  }
  return last;
}

void Session::help() {
  out_ << "Commands:\n"
          "  goal \"F\"                         read the goal |- F\n"
          "  goalseq \"A1; A2 |- B1; B2\"       read a sequent\n"
          "  step                             one proof step\n"
          "  steps N                          N proof steps\n"
          "  run                              steps until done or stuck\n"
          "  fail N \"F\"                       expect F to stay unproved after N steps\n"
          "  prove [--bound N] [--emit FILE] \"A |- B\"\n"
          "                                   bounded backtracking search\n"
          "  check FILE                       check a proof tree file\n"
          "  script FILE                      run commands from FILE\n"
          "  help, quit\n";
}

CommandResult Session::execute(std::string_view line) {
  const std::string text = trim(line);
  if (text.empty() || text.front() == '#') return {};

  std::vector<std::string> words;
  try {
    words = split_words(text);
  } catch (const SyntaxError& e) {
    out_ << "Error: " << e.what() << "\n";
    return {2, false};
  }
  const std::string& cmd = words.front();
  const std::size_t nargs = words.size() - 1;
  auto usage = [&](const char* form) {
    out_ << "Usage: " << form << "\n";
    return CommandResult{2, false};
  };

  try {
    if (cmd == "quit" || cmd == "exit") return {0, true};
    if (cmd == "help") {
      help();
      return {};
    }
    if (cmd == "goal") {
      if (nargs != 1) return usage("goal \"F\"");
      return {read_goal(words[1]), false};
    }
    if (cmd == "goalseq") {
      if (nargs < 1) return usage("goalseq \"A1; A2 |- B1; B2\"");
      std::string seq;
      for (std::size_t i = 1; i < words.size(); ++i) seq += (i > 1 ? " " : "") + words[i];
      auto [l, r] = split_sequent_text(seq);
      return {read_goalseq(l, r), false};
    }
    if (cmd == "step") {
      if (nargs != 0) return usage("step");
      return {step(), false};
    }
    if (cmd == "steps") {
      if (nargs != 1) return usage("steps N");
      return {steps(to_int(words[1])), false};
    }
    if (cmd == "run") {
      if (nargs != 0) return usage("run");
      return {run(), false};
    }
    if (cmd == "fail") {
      if (nargs != 2) return usage("fail N \"F\"");
      return {fail_goal(to_int(words[1]), words[2]), false};
    }
    if (cmd == "prove") {
      std::optional<int> bound;
      std::optional<std::string> emit;
      std::optional<std::string> seq;
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (words[i] == "--bound" && i + 1 < words.size()) {
          bound = to_int(words[++i]);
        } else if (words[i] == "--emit" && i + 1 < words.size()) {
          emit = words[++i];
        } else if (!seq) {
          seq = words[i];
        } else {
          return usage("prove [--bound N] [--emit FILE] \"A |- B\"");
        }
      }
      if (!seq || (bound && *bound < 0)) return usage("prove [--bound N] [--emit FILE] \"A |- B\"");
      return {prove(*seq, bound, emit), false};
    }
    if (cmd == "check") {
      if (nargs != 1) return usage("check FILE");
      return {check(words[1]), false};
    }
    if (cmd == "script") {
      if (nargs != 1) return usage("script FILE");
      return {script(words[1]), false};
    }
  } catch (const SyntaxError& e) {
    out_ << "Error: " << e.what() << "\n";
    return {2, false};
  }
  out_ << "Unknown command: " << cmd << " (try help)\n";
  return {2, false};
}

}  // namespace folderol
