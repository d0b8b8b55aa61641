// Verification sweeps, enumeration and turn-by-turn play.
#pragma once

#include <chrono>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sdnim/classifier.hpp"
#include "sdnim/core.hpp"
#include "sdnim/oracle.hpp"
#include "sdnim/strategy.hpp"

namespace sdnim {

/// Canonical multisets the closed form classifies P, ascending.
inline std::vector<Position> enumerate_p_positions(std::size_t n, Pile max_sum) {
  if (n < 2 || n > 4) throw std::invalid_argument("closed forms exist only for 2 to 4 piles");
  std::vector<Position> out;
  for_each_multiset(n, max_sum, [&](const Position& p) {
    if (classify(p) == Outcome::P) out.push_back(p);
  });
  return out;
}

struct Violation {
  Position position;
  std::optional<Move> move;  // the offending P->P move; empty for reachability
};

struct VerificationReport {
  std::size_t n = 0;
  Pile max_sum = 0;
  std::size_t positions_checked = 0;  // ordered arrangements classified
  std::size_t multisets = 0;
  std::vector<Mismatch> mismatches;
  std::vector<Violation> closure_violations;
  std::vector<Violation> reachability_violations;
  std::chrono::duration<double> elapsed{};

  bool passed() const {
    return mismatches.empty() && closure_violations.empty() && reachability_violations.empty();
  }
};

/// Oracle equivalence plus the two structural properties of the P-set: no
/// move joins two P-positions, and every N-position has a move into P.
inline VerificationReport verify(std::size_t n, Pile max_sum, OracleTable& table) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.n = n;
  report.max_sum = max_sum;

  Comparison cmp = compare_with_classifier(n, max_sum, table);
  report.positions_checked = cmp.ordered_positions;
  report.multisets = cmp.multisets;
  report.mismatches = std::move(cmp.mismatches);

  for_each_multiset(n, max_sum, [&](const Position& p) {
    const bool is_p = classify(p) == Outcome::P;
    bool reaches_p = false;
    for (const Move& m : legal_moves(p)) {
      if (classify(apply_move(p, m)) != Outcome::P) continue;
      reaches_p = true;
      if (is_p) report.closure_violations.push_back({p, m});
      else break;
    }
    if (!is_p && !reaches_p) report.reachability_violations.push_back({p, std::nullopt});
  });

  report.elapsed = std::chrono::steady_clock::now() - started;
  return report;
}

inline VerificationReport verify(std::size_t n, Pile max_sum) {
  OracleTable table;
  return verify(n, max_sum, table);
}

/// Binary digits of z right-aligned to `width` cells; the lowest set digit
/// is bracketed.
inline std::string binary_row(Pile z, unsigned width) {
  const unsigned low = v2(z) + 1;
  std::string row;
  for (unsigned k = std::max(width, bit_length(z)); k >= 1; --k) {
    const char digit = bit_at(z, k) ? '1' : '0';
    if (k == low) row += std::string("[") + digit + "]";
    else row += std::string(" ") + digit + " ";
  }
  return row;
}

inline std::string render_position(const Position& p) {
  unsigned width = 0;
  std::size_t dec_width = 0;
  for (Pile x : p.piles()) {
    width = std::max(width, bit_length(x));
    dec_width = std::max(dec_width, std::to_string(x).size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string dec = std::to_string(p[i]);
    out << "  " << (i + 1) << ": " << std::string(dec_width - dec.size(), ' ') << dec << "  "
        << binary_row(p[i], width) << "  v2=" << v2(p[i]) << "\n";
  }
  return out.str();
}

using Player = std::function<Move(const Position&)>;

struct Turn {
  Position before;
  Move move;
  std::string mover;
};

struct Transcript {
  Position start;
  std::vector<Turn> turns;
  Position final_position;
  std::string loser;  // player to move at the terminal position
  bool aborted = false;
};

namespace detail {

inline void play_into(Transcript& t, const std::string& first_name, const Player& first,
                      const std::string& second_name, const Player& second) {
  Position current = t.start;
  bool first_to_move = true;
  while (!is_terminal(current)) {
    const Player& mover = first_to_move ? first : second;
    Move m = mover(current);
    if (!is_legal(current, m)) throw std::logic_error("player returned an illegal move");
    t.turns.push_back({current, m, first_to_move ? first_name : second_name});
    current = apply_move(current, m);
    t.final_position = current;
    first_to_move = !first_to_move;
  }
  t.loser = first_to_move ? first_name : second_name;
}

}  // namespace detail

/// Alternates two players until the mover faces all ones. Each move must be
/// legal for the position it is played from.
inline Transcript run_game(const Position& start, const std::string& first_name, const Player& first,
                           const std::string& second_name, const Player& second) {
  if (is_terminal(start)) throw std::invalid_argument("game cannot start from a terminal position");
  Transcript t;
  t.start = t.final_position = start;
  detail::play_into(t, first_name, first, second_name, second);
  return t;
}

class InputClosed : public std::runtime_error {
 public:
  InputClosed() : std::runtime_error("input closed") {}
};

/// Reads "<delete> <split> <amount>" with 1-based pile numbers; amount is
/// either part of the split. Re-prompts until a legal move is entered.
inline Move read_human_move(const Position& p, std::istream& in, std::ostream& out) {
  std::string line;
  while (true) {
    out << "your move (delete split amount)> " << std::flush;
    if (!std::getline(in, line)) throw InputClosed();
    std::istringstream parse(line);
    long long del = 0, split = 0, amount = 0;
    std::string extra;
    if (!(parse >> del >> split >> amount) || (parse >> extra)) {
      out << "  expected three numbers, e.g. '2 1 16'\n";
      continue;
    }
    const auto n = static_cast<long long>(p.size());
    if (del < 1 || del > n || split < 1 || split > n || del == split) {
      out << "  pile numbers must be distinct and between 1 and " << n << "\n";
      continue;
    }
    const Pile pile = p[static_cast<std::size_t>(split - 1)];
    if (amount < 1 || static_cast<Pile>(amount) >= pile) {
      out << "  pile " << split << " has " << pile << " stones; the amount must leave both parts non-empty\n";
      continue;
    }
    return make_move(static_cast<std::size_t>(del - 1), static_cast<std::size_t>(split - 1), pile,
                     static_cast<Pile>(amount));
  }
}

/// Interactive game against the engine on the given streams.
inline Transcript play_session(const Position& start, bool human_first, Pile budget, std::istream& in,
                               std::ostream& out) {
  if (is_terminal(start)) throw std::invalid_argument("game cannot start from a terminal position");
  Player human = [&](const Position& p) {
    out << "\n" << render_position(p);
    return read_human_move(p, in, out);
  };
  Player engine = [&](const Position& p) {
    out << "\n" << render_position(p);
    MoveAdvice advice = engine_move(p, budget);
    out << "engine: delete pile " << advice.move.delete_index + 1 << ", split pile " << advice.move.split_index + 1
        << " into " << advice.move.left << " + " << advice.move.right << " -> " << format_position(advice.resulting)
        << "  [" << advice.rule << ", " << advice.claimed_class << "]\n";
    return advice.move;
  };

  Transcript t;
  t.start = t.final_position = start;
  try {
    if (human_first) detail::play_into(t, "human", human, "engine", engine);
    else detail::play_into(t, "engine", engine, "human", human);
  } catch (const InputClosed&) {
    t.aborted = true;
    out << "\ninput closed; game abandoned\n";
    return t;
  }
  out << "\n" << render_position(t.final_position) << t.loser << " cannot move and loses\n";
  return t;
}

/// "piles,sum,outcome[,length]" with piles joined by ';'.
inline std::string csv_row(const Position& p, Outcome o, std::optional<std::size_t> length = std::nullopt) {
  std::string row = format_position(p, ';') + "," + std::to_string(p.sum()) + "," + to_string(o);
  if (length) row += "," + std::to_string(*length);
  return row;
}

}  // namespace sdnim
