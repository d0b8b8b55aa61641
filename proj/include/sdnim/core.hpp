// Position and move model for Single-delete Nim, plus the binary-digit
// primitives every closed-form rule is written in.
//
// Bit indices are 1-based from the least significant digit: bit_at(z, 1) is
// the parity of z.
#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdnim {

using Pile = std::uint64_t;

/// Exponent of the largest power of two dividing z.
constexpr unsigned v2(Pile z) {
  if (z == 0) throw std::domain_error("v2 is undefined for 0");
  return static_cast<unsigned>(std::countr_zero(z));
}

/// k-th binary digit of z counted from the right, 1-based. Digits past the
/// word width are 0.
constexpr unsigned bit_at(Pile z, unsigned k) {
  if (k == 0) throw std::domain_error("bit index is 1-based");
  if (k > std::numeric_limits<Pile>::digits) return 0;
  return static_cast<unsigned>((z >> (k - 1)) & 1U);
}

/// Index of the highest set digit (1-based); 0 for z = 0.
constexpr unsigned bit_length(Pile z) { return static_cast<unsigned>(std::bit_width(z)); }

constexpr Pile pow2(unsigned k) {
  if (k >= std::numeric_limits<Pile>::digits) throw std::domain_error("2^k overflows a pile");
  return Pile{1} << k;
}

class Position {
 public:
  Position() = default;

  explicit Position(std::vector<Pile> piles) : piles_(std::move(piles)) {
    if (piles_.size() < 2) throw std::invalid_argument("a position needs at least 2 piles");
    for (Pile p : piles_)
      if (p == 0) throw std::invalid_argument("pile sizes must be positive");
  }

  Position(std::initializer_list<Pile> piles) : Position(std::vector<Pile>(piles)) {}

  const std::vector<Pile>& piles() const noexcept { return piles_; }
  std::size_t size() const noexcept { return piles_.size(); }
  Pile operator[](std::size_t i) const { return piles_.at(i); }

  /// Total stone count, saturating at the largest representable value.
  Pile sum() const noexcept {
    Pile total = 0;
    for (Pile p : piles_) {
      if (total > std::numeric_limits<Pile>::max() - p) return std::numeric_limits<Pile>::max();
      total += p;
    }
    return total;
  }

  /// Value-sorted copy; the memo key and enumeration order used everywhere.
  Position canonical() const {
    Position out = *this;
    std::sort(out.piles_.begin(), out.piles_.end());
    return out;
  }

  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<Pile> piles_;
};

/// One turn: remove the pile at delete_index, split the pile at split_index
/// into left + right with left <= right.
struct Move {
  std::size_t delete_index = 0;
  std::size_t split_index = 0;
  Pile left = 0;
  Pile right = 0;

  friend auto operator<=>(const Move&, const Move&) = default;
  friend bool operator==(const Move&, const Move&) = default;
};

/// Canonically oriented move that takes `part` stones off pile split_index.
inline Move make_move(std::size_t delete_index, std::size_t split_index, Pile pile, Pile part) {
  if (part == 0 || part >= pile) throw std::invalid_argument("split parts must both be positive");
  Pile other = pile - part;
  return Move{delete_index, split_index, std::min(part, other), std::max(part, other)};
}

inline bool is_terminal(const Position& p) {
  return std::all_of(p.piles().begin(), p.piles().end(), [](Pile x) { return x == 1; });
}

/// Every legal move, ordered by delete_index, then split_index, then left.
inline std::vector<Move> legal_moves(const Position& p) {
  std::vector<Move> moves;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || p[j] < 2) continue;
      for (Pile s = 1; s <= p[j] / 2; ++s) moves.push_back(Move{i, j, s, p[j] - s});
    }
  }
  return moves;
}

inline bool is_legal(const Position& p, const Move& m) {
  const std::size_t n = p.size();
  if (m.delete_index >= n || m.split_index >= n || m.delete_index == m.split_index) return false;
  if (m.left == 0 || m.right == 0 || m.left > m.right) return false;
  return m.left <= p[m.split_index] && m.right == p[m.split_index] - m.left;
}

/// The split slot receives the larger part and the deleted slot the smaller,
/// so pile count and the positions of untouched piles are preserved.
inline Position apply_move(const Position& p, const Move& m) {
  if (!is_legal(p, m)) throw std::invalid_argument("illegal move");
  std::vector<Pile> next = p.piles();
  next[m.split_index] = m.right;
  next[m.delete_index] = m.left;
  return Position(std::move(next));
}

struct Split {
  Pile power;  // 2^k
  Pile rest;   // z - 2^k
  friend bool operator==(const Split&, const Split&) = default;
};

/// Splits z into 2^k and z - 2^k; both parts have valuation exactly k.
inline Split split_at_level(Pile z, unsigned k) {
  if (k >= v2(z)) throw std::invalid_argument("split level must be below v2(z)");
  return Split{pow2(k), z - pow2(k)};
}

/// Piles reordered by ascending valuation (ties: value, then source index).
struct StandardForm {
  std::vector<Pile> piles;
  std::vector<unsigned> vals;
  std::vector<std::size_t> perm;  // piles[r] == source[perm[r]]
};

inline StandardForm standardize(const Position& p) {
  StandardForm sf;
  sf.perm.resize(p.size());
  std::iota(sf.perm.begin(), sf.perm.end(), std::size_t{0});
  std::sort(sf.perm.begin(), sf.perm.end(), [&](std::size_t i, std::size_t j) {
    auto key = [&](std::size_t t) { return std::tuple(v2(p[t]), p[t], t); };
    return key(i) < key(j);
  });
  for (std::size_t idx : sf.perm) {
    sf.piles.push_back(p[idx]);
    sf.vals.push_back(v2(p[idx]));
  }
  return sf;
}

/// Parses "294,208,304,432". Rejects zeros, signs, blanks and fewer than two piles.
inline Position parse_position(std::string_view text) {
  std::vector<Pile> piles;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw std::invalid_argument("empty pile in position '" + std::string(text) + "'");
    Pile value = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("pile '" + std::string(tok) + "' is not a positive integer");
      Pile digit = static_cast<Pile>(ch - '0');
      if (value > (std::numeric_limits<Pile>::max() - digit) / 10) throw std::invalid_argument("pile '" + std::string(tok) + "' is too large");
      value = value * 10 + digit;
    }
    piles.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Position(std::move(piles));
}

inline std::string format_position(const Position& p, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(p[i]);
  }
  return out;
}

}  // namespace sdnim
