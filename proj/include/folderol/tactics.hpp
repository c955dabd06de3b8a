#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace folderol {

/**
 * Lazy, memoized sequence.
 *
 * Each cell is computed on first demand and then cached, so a sequence may
 * be traversed several times without repeating work. Cells are shared
 * between copies; a Seq must not be forced from two threads at once.
 */
template <typename T>
class Seq {
 public:
  using Step = std::optional<std::pair<T, Seq<T>>>;
  using Thunk = std::function<Step()>;

  Seq() : cell_(std::make_shared<Cell>(Cell{true, std::nullopt, {}})) {}

  static Seq empty() { return Seq(); }
  static Seq cons(T head, Seq tail) {
    return Seq(std::make_shared<Cell>(Cell{true, Step(std::in_place, std::move(head), std::move(tail)), {}}));
  }
  static Seq single(T x) { return cons(std::move(x), empty()); }
  static Seq lazy(Thunk thunk) { return Seq(std::make_shared<Cell>(Cell{false, std::nullopt, std::move(thunk)})); }

  static Seq from(std::vector<T> xs) {
    Seq out;
    for (auto it = xs.rbegin(); it != xs.rend(); ++it) out = cons(std::move(*it), std::move(out));
    return out;
  }

  /// Head and tail, or nullopt at the end.
  const Step& pull() const {
    if (!cell_->forced) {
      Thunk thunk = std::move(cell_->thunk);
      cell_->thunk = nullptr;
      cell_->value = thunk();
      cell_->forced = true;
    }
    return cell_->value;
  }

  bool is_empty() const { return !pull().has_value(); }

  std::optional<T> first() const {
    const Step& s = pull();
    if (!s) return std::nullopt;
    return s->first;
  }

  /// At most n elements; forces no more cells than it returns (+1 at most).
  std::vector<T> take(std::size_t n) const {
    std::vector<T> out;
    Seq cur = *this;
    while (out.size() < n) {
      const Step& s = cur.pull();
      if (!s) break;
      out.push_back(s->first);
      Seq next = s->second;
      cur = std::move(next);
    }
    return out;
  }

 private:
  struct Cell {
    bool forced;
    Step value;
    Thunk thunk;
  };
  explicit Seq(std::shared_ptr<Cell> c) : cell_(std::move(c)) {}
  std::shared_ptr<Cell> cell_;
};

/// xs followed by the sequence ys() computes, which is not called until
/// xs is exhausted.
template <typename T>
Seq<T> append(Seq<T> xs, std::function<Seq<T>()> ys) {
  return Seq<T>::lazy([xs, ys]() -> typename Seq<T>::Step {
    const auto& s = xs.pull();
    if (!s) return ys().pull();
    return typename Seq<T>::Step(std::in_place, s->first, append(s->second, ys));
  });
}

template <typename T, typename F>
Seq<T> flat_map(Seq<T> xs, F f) {
  return Seq<T>::lazy([xs, f]() -> typename Seq<T>::Step {
    const auto& s = xs.pull();
    if (!s) return std::nullopt;
    Seq<T> rest = s->second;
    return append<T>(f(s->first), [rest, f] { return flat_map(rest, f); }).pull();
  });
}

/// Maps a proof state to its possible successors; no successors = failure.
template <typename State>
using Tactic = std::function<Seq<State>(const State&)>;

template <typename State>
Tactic<State> all_tac() {
  return [](const State& s) { return Seq<State>::single(s); };
}

template <typename State>
Tactic<State> no_tac() {
  return [](const State&) { return Seq<State>::empty(); };
}

/// Every outcome of t2 applied to every outcome of t1.
template <typename State>
Tactic<State> then(Tactic<State> t1, Tactic<State> t2) {
  return [t1, t2](const State& s) { return flat_map(t1(s), t2); };
}

/// The outcomes of t1, or those of t2 if t1 has none.
template <typename State>
Tactic<State> orelse(Tactic<State> t1, Tactic<State> t2) {
  return [t1, t2](const State& s) {
    Seq<State> first = t1(s);
    return Seq<State>::lazy([first, t2, s]() -> typename Seq<State>::Step {
      if (!first.is_empty()) return first.pull();
      return t2(s).pull();
    });
  };
}

/// The outcomes of t1 followed by those of t2. Unlike orelse, later
/// tactics can backtrack into t2 after t1's outcomes lead nowhere.
template <typename State>
Tactic<State> append(Tactic<State> t1, Tactic<State> t2) {
  return [t1, t2](const State& s) { return append<State>(t1(s), [t2, s] { return t2(s); }); };
}

/// Applies t as often as possible. Each application is deferred until the
/// previous outcome is demanded.
template <typename State>
Tactic<State> repeat(Tactic<State> t) {
  return [t](const State& s) {
    Tactic<State> again = [t](const State& x) { return repeat(t)(x); };
    return orelse(then(t, again), all_tac<State>())(s);
  };
}

/// Depth-first search of the tree of tac outcomes, yielding states that
/// satisfy pred. With max_depth, branches longer than that are cut off.
template <typename State, typename Pred>
Tactic<State> depth_first(Pred pred, Tactic<State> tac, std::optional<std::size_t> max_depth = std::nullopt) {
  return [pred, tac, max_depth](const State& s) -> Seq<State> {
    if (pred(s)) return Seq<State>::single(s);
    if (max_depth && *max_depth == 0) return Seq<State>::empty();
    std::optional<std::size_t> below;
    if (max_depth) below = *max_depth - 1;
    return flat_map(tac(s), depth_first<State>(pred, tac, below));
  };
}

}  // namespace folderol
