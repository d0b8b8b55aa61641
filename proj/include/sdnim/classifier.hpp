// Closed-form P/N classification for 2, 3 and 4 piles, and the two known
// families for larger pile counts.
#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "sdnim/core.hpp"

namespace sdnim {

enum class Outcome { P, N, Unknown };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::P: return "P";
    case Outcome::N: return "N";
    default: return "Unknown";
  }
}

/// Equality shape of the sorted valuations (a, b, c, d).
enum class Pattern { EQ4, A_LT_B_EQ_C_EQ_D, A_LT_B_LT_C_EQ_D, A_LT_B_LT_C_LT_D, TRIANGLE };

inline const char* to_string(Pattern p) {
  switch (p) {
    case Pattern::EQ4: return "EQ4";
    case Pattern::A_LT_B_EQ_C_EQ_D: return "A_LT_B_EQ_C_EQ_D";
    case Pattern::A_LT_B_LT_C_EQ_D: return "A_LT_B_LT_C_EQ_D";
    case Pattern::A_LT_B_LT_C_LT_D: return "A_LT_B_LT_C_LT_D";
    default: return "TRIANGLE";
  }
}

inline Pattern pattern_of(unsigned a, unsigned b, unsigned c, unsigned d) {
  if (a == b && b == c && c == d) return Pattern::EQ4;
  if (a < b && b == c && c == d) return Pattern::A_LT_B_EQ_C_EQ_D;
  if (a < b && b < c && c == d) return Pattern::A_LT_B_LT_C_EQ_D;
  if (a < b && b < c && c < d) return Pattern::A_LT_B_LT_C_LT_D;
  return Pattern::TRIANGLE;
}

/// Which of the five four-pile P-classes a position falls in (1..5), or 0.
using PIndex = int;

/// Full evaluation of the four-pile rule on the standard form. Conditions
/// are only present for the pattern they belong to; keys are "2A" .. "5F".
struct ConditionReport {
  std::array<unsigned, 4> vals{};
  Pattern pattern = Pattern::EQ4;
  std::map<std::string, bool> conditions;
  StandardForm standard;
  PIndex p_index = 0;
  Outcome outcome = Outcome::N;

  std::optional<bool> condition(const std::string& key) const {
    auto it = conditions.find(key);
    if (it == conditions.end()) return std::nullopt;
    return it->second;
  }
};

namespace detail {

inline void require_size(const Position& p, std::size_t n) {
  if (p.size() != n) throw std::invalid_argument("expected " + std::to_string(n) + " piles, got " + std::to_string(p.size()));
}

// For lo <= k <= hi: sum of digit k over `piles` >= need. Empty range is true.
template <std::size_t N>
bool digit_sum_at_least(const std::array<Pile, N>& piles, unsigned lo, unsigned hi, unsigned need) {
  for (unsigned k = lo; k <= hi; ++k) {
    unsigned s = 0;
    for (Pile x : piles) s += bit_at(x, k);
    if (s < need) return false;
  }
  return true;
}

}  // namespace detail

/// Evaluates the four-pile conditions on an explicit valuation-sorted order.
/// Any order of equal-valuation piles gives the same report.
inline ConditionReport evaluate_conditions(StandardForm sf) {
  if (sf.piles.size() != 4 || sf.vals.size() != 4) throw std::invalid_argument("expected a four-pile standard form");
  if (!std::is_sorted(sf.vals.begin(), sf.vals.end())) throw std::invalid_argument("valuations must be non-decreasing");
  ConditionReport r;
  r.standard = std::move(sf);
  const auto& s = r.standard.piles;
  const Pile w = s[0], x = s[1], y = s[2], z = s[3];
  const unsigned a = r.standard.vals[0], b = r.standard.vals[1], c = r.standard.vals[2], d = r.standard.vals[3];
  r.vals = {a, b, c, d};
  r.pattern = pattern_of(a, b, c, d);
  auto& cond = r.conditions;

  switch (r.pattern) {
    case Pattern::EQ4:
      r.p_index = 1;
      break;
    case Pattern::A_LT_B_EQ_C_EQ_D:
      cond["2A"] = bit_at(w, b + 1) == 0;
      if (cond["2A"]) r.p_index = 2;
      break;
    case Pattern::A_LT_B_LT_C_EQ_D:
      cond["3A"] = bit_at(w, c + 1) == 0 && bit_at(x, c + 1) == 0;
      cond["3B"] = detail::digit_sum_at_least(std::array{w, x}, b + 2, c, 1);
      cond["3C"] = bit_at(w, b + 1) == 1;
      if (cond["3A"] && cond["3B"] && cond["3C"]) r.p_index = 3;
      break;
    case Pattern::A_LT_B_LT_C_LT_D: {
      const bool upper = detail::digit_sum_at_least(std::array{w, x, y}, c + 2, d, 2);
      const bool middle = bit_at(w, c + 1) == 1 && bit_at(x, c + 1) == 1;
      const bool lower = detail::digit_sum_at_least(std::array{w, x}, b + 2, c, 1);
      const bool bottom = bit_at(w, b + 1) == 1;
      cond["4A"] = bit_at(w, d + 1) == 0 && bit_at(x, d + 1) == 0 && bit_at(y, d + 1) == 0;
      cond["4B"] = upper;
      cond["4C"] = middle;
      cond["4D"] = lower;
      cond["4E"] = bottom;

      // Digit sums above the longest pile are 0, which is admitted.
      const unsigned top = std::max({bit_length(w), bit_length(x), bit_length(y), bit_length(z)});
      bool high = true;
      for (unsigned i = d + 2; i <= top; ++i) {
        unsigned sum = bit_at(w, i) + bit_at(x, i) + bit_at(y, i) + bit_at(z, i);
        if (sum == 1 || sum == 2) {
          high = false;
          break;
        }
      }
      cond["5A"] = high;
      cond["5B"] = bit_at(w, d + 1) == 1 && bit_at(x, d + 1) == 1 && bit_at(y, d + 1) == 1;
      cond["5C"] = upper;
      cond["5D"] = middle;
      cond["5E"] = lower;
      cond["5F"] = bottom;

      auto all = [&](std::initializer_list<const char*> keys) {
        return std::all_of(keys.begin(), keys.end(), [&](const char* k) { return cond.at(k); });
      };
      if (all({"4A", "4B", "4C", "4D", "4E"})) r.p_index = 4;
      else if (all({"5A", "5B", "5C", "5D", "5E", "5F"})) r.p_index = 5;
      break;
    }
    case Pattern::TRIANGLE:
      break;
  }
  r.outcome = r.p_index != 0 ? Outcome::P : Outcome::N;
  return r;
}

inline ConditionReport diagnose4(const Position& p) {
  detail::require_size(p, 4);
  return evaluate_conditions(standardize(p));
}

inline Outcome classify2(Pile y, Pile z) {
  if (y == 0 || z == 0) throw std::invalid_argument("pile sizes must be positive");
  return (y % 2 == 1 && z % 2 == 1) ? Outcome::P : Outcome::N;
}

/// All three piles share one valuation.
inline bool star_holds(const Position& p) {
  detail::require_size(p, 3);
  return v2(p[0]) == v2(p[1]) && v2(p[1]) == v2(p[2]);
}

inline Outcome classify3(const Position& p) { return star_holds(p) ? Outcome::P : Outcome::N; }

inline Outcome classify4(const Position& p) { return diagnose4(p).outcome; }

enum class Family { None, AllOdd, AllTwos };

inline Family family_of(const Position& p) {
  const auto& v = p.piles();
  if (std::all_of(v.begin(), v.end(), [](Pile x) { return x % 2 == 1; })) return Family::AllOdd;
  if (std::all_of(v.begin(), v.end(), [](Pile x) { return x == 2; })) return Family::AllTwos;
  return Family::None;
}

inline Outcome family_outcome(const Position& p) {
  switch (family_of(p)) {
    case Family::AllOdd: return Outcome::P;
    case Family::AllTwos: return p.size() % 3 == 2 ? Outcome::N : Outcome::P;
    default: return Outcome::Unknown;
  }
}

inline Outcome classify(const Position& p) {
  switch (p.size()) {
    case 2: return classify2(p[0], p[1]);
    case 3: return classify3(p);
    case 4: return classify4(p);
    default: return family_outcome(p);
  }
}

}  // namespace sdnim
