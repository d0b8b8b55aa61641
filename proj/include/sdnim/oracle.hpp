// Brute-force solver: exhaustive move expansion with memoization on the
// value-sorted pile multiset. Ground truth for every closed-form rule.
#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sdnim/classifier.hpp"
#include "sdnim/core.hpp"

namespace sdnim {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const Position& at)
      : std::runtime_error("oracle node budget exceeded while solving " + format_position(at)), position_(at) {}
  const Position& position() const noexcept { return position_; }

 private:
  Position position_;
};

struct Solution {
  Outcome outcome = Outcome::P;  // never Unknown
  std::size_t length = 0;        // plies to the end under optimal play

  friend bool operator==(const Solution&, const Solution&) = default;
};

/// Memo of solved canonical positions. Not synchronized: confine one table
/// to one thread.
class OracleTable {
 public:
  static constexpr std::size_t kDefaultBudget = 10'000'000;

  explicit OracleTable(std::size_t node_budget = kDefaultBudget) : node_budget_(node_budget) {}

  std::size_t size() const noexcept { return memo_.size(); }
  std::size_t node_budget() const noexcept { return node_budget_; }
  void clear() { memo_.clear(); }

  Solution solve(const Position& p) { return solve_canonical(p.canonical().piles()); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Pile>& v) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (Pile x : v) {
        h ^= std::hash<Pile>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  // Sorted children of a sorted key, deduplicated.
  static std::vector<std::vector<Pile>> children(const std::vector<Pile>& key) {
    std::vector<std::vector<Pile>> out;
    const std::size_t n = key.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && key[i] == key[i - 1]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || key[j] < 2) continue;
        if (j > 0 && j - 1 != i && key[j] == key[j - 1]) continue;
        for (Pile s = 1; s <= key[j] / 2; ++s) {
          std::vector<Pile> child;
          child.reserve(n);
          for (std::size_t t = 0; t < n; ++t)
            if (t != i && t != j) child.push_back(key[t]);
          child.push_back(s);
          child.push_back(key[j] - s);
          std::sort(child.begin(), child.end());
          out.push_back(std::move(child));
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Solution solve_canonical(const std::vector<Pile>& key) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool any_p_child = false;
    std::size_t best_win = 0;   // min length over P children
    std::size_t worst_loss = 0; // max length over all children
    for (const auto& child : children(key)) {
      const Solution s = solve_canonical(child);
      if (s.outcome == Outcome::P) {
        best_win = any_p_child ? std::min(best_win, s.length) : s.length;
        any_p_child = true;
      }
      worst_loss = std::max(worst_loss, s.length);
    }

    Solution result;
    bool terminal = std::all_of(key.begin(), key.end(), [](Pile x) { return x == 1; });
    if (terminal) {
      result = {Outcome::P, 0};
    } else if (any_p_child) {
      result = {Outcome::N, best_win + 1};
    } else {
      result = {Outcome::P, worst_loss + 1};
    }
    if (memo_.size() >= node_budget_) throw BudgetExceeded(Position(key));
    memo_.emplace(key, result);
    return result;
  }

  std::size_t node_budget_;
  std::unordered_map<std::vector<Pile>, Solution, KeyHash> memo_;
};

inline Outcome solve(const Position& p, OracleTable& table) { return table.solve(p).outcome; }

inline Solution solve_with_length(const Position& p, OracleTable& table) { return table.solve(p); }

/// Calls fn on every multiset of n positive piles with sum <= max_sum, as
/// value-sorted positions in ascending lexicographic order.
inline void for_each_multiset(std::size_t n, Pile max_sum, const std::function<void(const Position&)>& fn) {
  if (n < 2) throw std::invalid_argument("pile count must be at least 2");
  if (max_sum < n) return;
  std::vector<Pile> piles(n, 1);
  // Recursive fill: slot t takes values >= piles[t-1] while leaving room for the rest.
  std::function<void(std::size_t, Pile, Pile)> fill = [&](std::size_t t, Pile lo, Pile remaining) {
    if (t == n) {
      fn(Position(piles));
      return;
    }
    const Pile slots = n - t;
    for (Pile v = lo; v * slots <= remaining; ++v) {
      piles[t] = v;
      fill(t + 1, v, remaining - v);
    }
  };
  fill(0, 1, max_sum);
}

struct SweepEntry {
  Position position;
  Outcome outcome;
  std::size_t length;
};

inline std::vector<SweepEntry> sweep(std::size_t n, Pile max_sum, OracleTable& table) {
  if (max_sum < n) throw std::invalid_argument("max_sum must be at least the pile count");
  std::vector<SweepEntry> out;
  for_each_multiset(n, max_sum, [&](const Position& p) {
    Solution s = table.solve(p);
    out.push_back({p, s.outcome, s.length});
  });
  return out;
}

struct Mismatch {
  Position position;  // the ordered arrangement the classifier saw
  Outcome classifier;
  Outcome oracle;
};

struct Comparison {
  std::size_t multisets = 0;
  std::size_t ordered_positions = 0;
  std::vector<Mismatch> mismatches;
};

/// Sweeps every multiset and classifies every distinct ordering of it
/// against the oracle verdict for the multiset.
inline Comparison compare_with_classifier(std::size_t n, Pile max_sum, OracleTable& table) {
  if (n < 2 || n > 4) throw std::invalid_argument("closed forms exist only for 2 to 4 piles");
  Comparison cmp;
  for (const SweepEntry& e : sweep(n, max_sum, table)) {
    ++cmp.multisets;
    std::vector<Pile> order = e.position.piles();
    do {
      ++cmp.ordered_positions;
      Position arranged(order);
      Outcome c = classify(arranged);
      if (c != e.outcome) cmp.mismatches.push_back({arranged, c, e.outcome});
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return cmp;
}

inline Comparison compare_with_classifier(std::size_t n, Pile max_sum) {
  OracleTable table;
  return compare_with_classifier(n, max_sum, table);
}

}  // namespace sdnim
