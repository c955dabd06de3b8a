#include "folderol/batch.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <string>

namespace folderol {

FolderolOutcome run_folderol(const Sequent& s, std::size_t max_steps) {
  Engine engine;
  GoalTable tab = engine.read_table(s.left, s.right);
  RunResult r = engine.proof_steps(-1, std::move(tab), {}, max_steps);
  return FolderolOutcome{r.table.empty(), r.no_rules, r.capped, r.events.size()};
}

std::vector<FolderolOutcome> run_folderol_serial(const std::vector<Sequent>& problems, std::size_t max_steps) {
  std::vector<FolderolOutcome> out(problems.size());
  for (std::size_t i = 0; i < problems.size(); ++i) out[i] = run_folderol(problems[i], max_steps);
  return out;
}

std::vector<FolderolOutcome> run_folderol_parallel(const std::vector<Sequent>& problems, std::size_t max_steps) {
  std::vector<FolderolOutcome> out(problems.size());
  const auto n = static_cast<std::ptrdiff_t>(problems.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = run_folderol(problems[i], max_steps);
  return out;
}

std::vector<std::optional<ProofTree>> prove_bounded_serial(const std::vector<Sequent>& problems, int bound) {
  std::vector<std::optional<ProofTree>> out(problems.size());
  for (std::size_t i = 0; i < problems.size(); ++i) out[i] = prove_bounded(problems[i].left, problems[i].right, bound);
  return out;
}

std::vector<std::optional<ProofTree>> prove_bounded_parallel(const std::vector<Sequent>& problems, int bound) {
  std::vector<std::optional<ProofTree>> out(problems.size());
  const auto n = static_cast<std::ptrdiff_t>(problems.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = prove_bounded(problems[i].left, problems[i].right, bound);
  return out;
}

std::vector<CheckReport> check_all_serial(const std::vector<ProofTree>& trees) {
  std::vector<CheckReport> out(trees.size());
  for (std::size_t i = 0; i < trees.size(); ++i) out[i] = check_proof(trees[i]);
  return out;
}

std::vector<CheckReport> check_all_parallel(const std::vector<ProofTree>& trees) {
  std::vector<CheckReport> out(trees.size());
  const auto n = static_cast<std::ptrdiff_t>(trees.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = check_proof(trees[i]);
  return out;
}

int batch_threads() { return omp_get_max_threads(); }

namespace {

const std::string kHole = "_";

// Every formula shape with exactly k connectives; leaves are Pred("_").
const std::vector<Formula>& shapes(int k) {
  static std::vector<std::vector<Formula>> memo;
  while (static_cast<int>(memo.size()) <= k) {
    const int m = static_cast<int>(memo.size());
    std::vector<Formula> out;
    if (m == 0) {
      out.push_back(Formula::pred(kHole));
    } else {
      for (const Formula& a : memo[m - 1]) out.push_back(Formula::negation(a));
      for (Connective c : {Connective::And, Connective::Or, Connective::Implies, Connective::Iff})
        for (int i = 0; i < m; ++i)
          for (const Formula& a : memo[i])
            for (const Formula& b : memo[m - 1 - i]) out.push_back(Formula::binary(c, a, b));
    }
    memo.push_back(std::move(out));
  }
  return memo[k];
}

int leaves(const Formula& a) {
  if (a.is_pred()) return 1;
  int n = 0;
  for (const Formula& b : a.operands()) n += leaves(b);
  return n;
}

std::string letter(int i) {
  static const char* kLetters = "PQRSTUVW";
  return i < 8 ? std::string(1, kLetters[i]) : "P" + std::to_string(i);
}

Formula fill(const Formula& a, const std::vector<int>& labels, std::size_t& next) {
  if (a.is_pred()) return Formula::pred(letter(labels[next++]));
  std::vector<Formula> ops;
  for (const Formula& b : a.operands()) ops.push_back(fill(b, labels, next));
  return Formula::conn(a.connective(), std::move(ops));
}

// Restricted growth strings: labels[0] = 0 and each label is at most one
// more than the largest before it.
void growth_strings(int length, int max_blocks, const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> labels(static_cast<std::size_t>(length), 0);
  std::function<void(int, int)> go = [&](int pos, int used) {
    if (pos == length) {
      emit(labels);
      return;
    }
    for (int l = 0; l <= used && l < max_blocks; ++l) {
      labels[static_cast<std::size_t>(pos)] = l;
      go(pos + 1, std::max(used, l + 1));
    }
  };
  if (length == 0) {
    emit(labels);
  } else {
    go(0, 0);
  }
}

}  // namespace

std::vector<Sequent> enumerate_propositional(int letters, int max_connectives) {
  std::vector<Sequent> out;
  auto emit_shape = [&](const std::vector<Formula>& lshape, const std::vector<Formula>& rshape) {
    int total = 0;
    for (const Formula& a : lshape) total += leaves(a);
    for (const Formula& b : rshape) total += leaves(b);
    growth_strings(total, letters, [&](const std::vector<int>& labels) {
      std::size_t next = 0;
      Sequent s;
      for (const Formula& a : lshape) s.left.push_back(fill(a, labels, next));
      for (const Formula& b : rshape) s.right.push_back(fill(b, labels, next));
      out.push_back(std::move(s));
    });
  };

  for (int k = 0; k <= max_connectives; ++k)
    for (const Formula& a : shapes(k)) emit_shape({}, {a});
  for (int k = 0; k <= max_connectives; ++k)
    for (const Formula& a : shapes(k)) emit_shape({a}, {});
  for (int i = 0; i <= max_connectives; ++i)
    for (int j = 0; i + j <= max_connectives; ++j)
      for (const Formula& a : shapes(i))
        for (const Formula& b : shapes(j)) emit_shape({a}, {b});
  return out;
}

}  // namespace folderol
