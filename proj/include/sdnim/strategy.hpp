// Winning-move production. Three and four piles use constructive rules that
// split a single power of two off one pile; everything else falls back to a
// classifier-guided scan of the legal moves.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdnim/classifier.hpp"
#include "sdnim/core.hpp"
#include "sdnim/oracle.hpp"

namespace sdnim {

struct MoveAdvice {
  Move move;
  Position resulting;
  std::string claimed_class = "none";  // P1..P5, STAR, BOTH_ODD or none
  std::string rule;                    // "3.2-b", "star", "search", ...
};

/// Class label of a P-position: BOTH_ODD for two piles, STAR for three,
/// P1..P5 for four; "none" otherwise.
inline std::string p_class_label(const Position& p) {
  switch (p.size()) {
    case 2: return classify2(p[0], p[1]) == Outcome::P ? "BOTH_ODD" : "none";
    case 3: return star_holds(p) ? "STAR" : "none";
    case 4: {
      PIndex c = diagnose4(p).p_index;
      return c ? "P" + std::to_string(c) : "none";
    }
    default: return "none";
  }
}

/// First legal move (canonical order) whose result classifies P.
inline std::optional<MoveAdvice> first_winning_move(const Position& p) {
  Outcome o = classify(p);
  if (o == Outcome::Unknown) throw std::invalid_argument("no closed form for " + format_position(p));
  if (o == Outcome::P) return std::nullopt;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || p[j] < 2) continue;
      for (Pile s = 1; s <= p[j] / 2; ++s) {
        Move m{i, j, s, p[j] - s};
        Position next = apply_move(p, m);
        if (classify(next) == Outcome::P) return MoveAdvice{m, next, p_class_label(next), "search"};
      }
    }
  }
  return std::nullopt;  // unreachable while the closed form is sound
}

/// Three piles: keep the lowest-valuation pile, delete the middle one and
/// split the highest at the lowest valuation.
inline std::optional<MoveAdvice> constructive_move3(const Position& p) {
  detail::require_size(p, 3);
  if (star_holds(p)) return std::nullopt;
  StandardForm sf = standardize(p);
  Split parts = split_at_level(sf.piles[2], sf.vals[0]);
  Move m = make_move(sf.perm[1], sf.perm[2], sf.piles[2], parts.power);
  Position next = apply_move(p, m);
  return MoveAdvice{m, next, "STAR", "star"};
}

namespace detail {

// One transcribed proof step: take 2^level off the pile at standard rank
// `split`, delete the pile at rank `drop`.
struct CascadeRule {
  std::string label;
  PIndex target;
  std::size_t split;
  std::size_t drop;
  unsigned level;
};

inline std::vector<CascadeRule> cascade_candidates(const ConditionReport& r) {
  std::vector<CascadeRule> out;
  const auto& s = r.standard.piles;
  const auto& v = r.standard.vals;
  const unsigned a = v[0], b = v[1], c = v[2], d = v[3];
  auto add = [&](std::string label, PIndex target, std::size_t split, std::size_t drop, unsigned level) {
    out.push_back({"3.2-" + std::move(label), target, split, drop, level});
  };
  auto I = [&](std::size_t rank, unsigned k) { return bit_at(s[rank], k); };
  (void)a;

  switch (r.pattern) {
    case Pattern::EQ4:
      break;

    case Pattern::TRIANGLE: {
      // Lowest valuation held by two piles; split one of the others there.
      for (std::size_t lo = 0; lo + 1 < 4; ++lo) {
        if (v[lo] != v[lo + 1]) continue;
        std::vector<std::size_t> others;
        for (std::size_t t = 0; t < 4; ++t)
          if (t != lo && t != lo + 1) others.push_back(t);
        for (auto it = others.rbegin(); it != others.rend(); ++it)
          for (std::size_t drop : others)
            if (drop != *it && v[*it] > v[lo]) add("a", 1, *it, drop, v[lo]);
        break;
      }
      break;
    }

    case Pattern::A_LT_B_EQ_C_EQ_D:
      if (I(0, b + 1) == 1)
        for (std::size_t drop : {1, 2, 3}) add("b", 2, 0, drop, b);
      break;

    case Pattern::A_LT_B_LT_C_EQ_D:
      if (I(0, c + 1) == 1) add("c1", 2, 0, 1, c);
      if (I(1, c + 1) == 1) add("c1", 2, 1, 0, c);
      if (I(0, b + 1) == 0) {
        add("c2", 2, 3, 2, b);
        add("c2", 2, 2, 3, b);
      } else {
        for (unsigned k = b + 1; k < c; ++k) {
          if (I(0, k + 1) == 0 && I(1, k + 1) == 0) {
            add("c3", 3, 3, 2, k);
            add("c3", 3, 2, 3, k);
            break;
          }
        }
      }
      break;

    case Pattern::A_LT_B_LT_C_LT_D: {
      const unsigned top_sum = I(0, d + 1) + I(1, d + 1) + I(2, d + 1);
      // The d) bullets hold whatever the digits at d+1 are; with all three set
      // they are the f) bullets.
      const std::string grp = top_sum == 3 ? "f" : "d";
      if (I(0, b + 1) == 0) {
        add(grp + "1", 2, 3, 2, b);
        add(grp + "1", 2, 2, 3, b);
      } else {
        for (unsigned k = b + 1; k < c; ++k) {
          if (I(0, k + 1) == 0 && I(1, k + 1) == 0) {
            add(grp + "2", 3, 3, 2, k);
            add(grp + "2", 3, 2, 3, k);
            break;
          }
        }
      }
      if (I(0, c + 1) == 0) add(grp + "3", 2, 3, 1, c);
      if (I(1, c + 1) == 0) add(grp + "3", 2, 3, 0, c);
      for (unsigned k = c + 1; k < d; ++k) {
        std::vector<std::size_t> zeros;
        for (std::size_t t = 0; t < 3; ++t)
          if (I(t, k + 1) == 0) zeros.push_back(t);
        if (zeros.size() < 2) continue;
        // Keep two zero-digit piles, delete the remaining one of the lower three.
        for (std::size_t p = 0; p < zeros.size(); ++p)
          for (std::size_t q = p + 1; q < zeros.size(); ++q)
            add(grp + "4", 3, 3, 3 - zeros[p] - zeros[q], k);
        break;
      }

      if (top_sum == 1 || top_sum == 2) {
        // e) and g): split a pile whose digit d+1 is 1 at level d.
        for (std::size_t split = 3; split-- > 0;) {
          if (I(split, d + 1) != 1) continue;
          for (std::size_t drop = 0; drop < 3; ++drop)
            if (drop != split) add("e", 3, split, drop, d);
        }
      }

      if (top_sum == 3) {
        const unsigned top = std::max({bit_length(s[0]), bit_length(s[1]), bit_length(s[2]), bit_length(s[3])});
        for (unsigned k = d + 1; k <= top; ++k) {
          std::vector<std::size_t> ones;
          for (std::size_t t = 0; t < 4; ++t)
            if (I(t, k + 1) == 1) ones.push_back(t);
          if (ones.size() != 1 && ones.size() != 2) continue;
          // Keep two zero-digit piles beside the split one.
          for (auto it = ones.rbegin(); it != ones.rend(); ++it)
            for (std::size_t drop = 0; drop < 4; ++drop) {
              if (drop == *it) continue;
              if (ones.size() == 2 && I(drop, k + 1) == 0) continue;
              add("h", 4, *it, drop, k);
            }
          break;
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

/// Four piles: first applicable rule of the cascade whose result classifies
/// P; rule "search" when none does.
inline std::optional<MoveAdvice> constructive_move4(const Position& p) {
  const ConditionReport report = diagnose4(p);
  if (report.outcome == Outcome::P) return std::nullopt;
  const auto& sf = report.standard;
  for (const auto& rule : detail::cascade_candidates(report)) {
    const Pile pile = sf.piles[rule.split];
    if (rule.level >= std::numeric_limits<Pile>::digits || pile <= pow2(rule.level)) continue;
    Move m = make_move(sf.perm[rule.drop], sf.perm[rule.split], pile, pow2(rule.level));
    Position next = apply_move(p, m);
    if (diagnose4(next).p_index == rule.target) return MoveAdvice{m, next, "P" + std::to_string(rule.target), rule.label};
  }
  return first_winning_move(p);
}

/// Winning move for an N-position, none for a P-position. Three and four
/// piles go through the constructive rules.
inline std::optional<MoveAdvice> winning_move(const Position& p) {
  if (classify(p) == Outcome::Unknown) throw std::invalid_argument("no closed form for " + format_position(p));
  switch (p.size()) {
    case 3: return constructive_move3(p);
    case 4: return constructive_move4(p);
    default: return first_winning_move(p);
  }
}

inline constexpr Pile kDefaultEngineBudget = 64;

/// Engine choice for any non-terminal position. Lost positions are played to
/// maximize the remaining game length when the oracle can afford it.
inline MoveAdvice engine_move(const Position& p, Pile budget = kDefaultEngineBudget) {
  if (is_terminal(p)) throw std::invalid_argument("no moves from a terminal position");
  const Outcome known = classify(p);
  if (known == Outcome::N && p.size() <= 4) return *winning_move(p);

  if (p.sum() <= budget) {
    OracleTable table;
    const bool winning = known == Outcome::N || (known == Outcome::Unknown && solve(p, table) == Outcome::N);
    std::optional<MoveAdvice> best;
    std::size_t best_len = 0;
    for (const Move& m : legal_moves(p)) {
      Position next = apply_move(p, m);
      Solution s = table.solve(next);
      if (winning) {
        if (s.outcome == Outcome::P && (!best || s.length < best_len)) {
          best = MoveAdvice{m, next, p_class_label(next), "oracle"};
          best_len = s.length;
        }
      } else if (!best || s.length > best_len) {
        best = MoveAdvice{m, next, "none", "delay"};
        best_len = s.length;
      }
    }
    return *best;
  }

  if (known == Outcome::N)
    if (auto advice = first_winning_move(p)) return *advice;
  Move m = legal_moves(p).front();
  Position next = apply_move(p, m);
  return MoveAdvice{m, next, "none", "first-legal"};
}

}  // namespace sdnim
