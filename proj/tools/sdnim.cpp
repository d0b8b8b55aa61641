// sdnim: command-line front end for the Single-delete Nim engine.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "sdnim/sdnim.hpp"
#include "sdnim/service.hpp"

namespace {

using namespace sdnim;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerifyFailed = 2;

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_classify(const Position& p, bool as_json) {
  const Outcome o = classify(p);
  json body = service::handle_classify(json{{"piles", p.piles()}}).body;
  std::optional<Solution> oracle;
  if (o == Outcome::Unknown && p.sum() <= kDefaultEngineBudget) {
    OracleTable table;
    oracle = table.solve(p);
    body["oracle"] = to_string(oracle->outcome);
  }
  if (as_json) {
    print_json(body);
    return kOk;
  }
  std::cout << "position: " << format_position(p) << "\noutcome:  " << to_string(o) << "\n";
  if (p.size() == 4) {
    const ConditionReport r = diagnose4(p);
    std::cout << "pattern:  " << to_string(r.pattern) << "  vals (" << r.vals[0] << "," << r.vals[1] << ","
              << r.vals[2] << "," << r.vals[3] << ")\n";
    if (r.p_index) std::cout << "class:    P" << r.p_index << "\n";
    for (const auto& [key, value] : r.conditions) std::cout << "  (" << key << ") " << (value ? "yes" : "no") << "\n";
  } else if (p.size() == 3) {
    std::cout << "equal valuations: " << (star_holds(p) ? "yes" : "no") << "\n";
  } else if (p.size() >= 5) {
    std::cout << "family:   " << body["report"]["family"].get<std::string>() << "\n";
    if (oracle) std::cout << "oracle:   " << to_string(oracle->outcome) << "\n";
  }
  std::cout << render_position(p);
  return kOk;
}

int cmd_best_move(const Position& p, bool constructive, bool as_json) {
  if (constructive && p.size() != 3 && p.size() != 4) {
    std::cerr << "--constructive needs 3 or 4 piles\n";
    return kUsage;
  }
  if (classify(p) == Outcome::Unknown) {
    std::cerr << "no closed form for " << format_position(p) << "; try 'sdnim oracle' or 'sdnim play'\n";
    return kUsage;
  }
  std::optional<MoveAdvice> advice;
  if (constructive) advice = p.size() == 3 ? constructive_move3(p) : constructive_move4(p);
  else advice = winning_move(p);

  if (as_json) {
    print_json(json{{"outcome", to_string(classify(p))}, {"advice", advice ? to_json(*advice) : json(nullptr)}});
    return kOk;
  }
  if (!advice) {
    std::cout << format_position(p) << " is a P-position: every move loses against best play\n";
    return kOk;
  }
  const Move& m = advice->move;
  std::cout << "delete pile " << m.delete_index + 1 << " (" << p[m.delete_index] << "), split pile "
            << m.split_index + 1 << " (" << p[m.split_index] << ") into " << m.left << " + " << m.right << "\n"
            << "result: " << format_position(advice->resulting) << "  class " << advice->claimed_class << "\n";
  if (constructive) std::cout << "rule:   " << advice->rule << "\n";
  return kOk;
}

int cmd_enumerate(std::size_t n, Pile max_sum, const std::string& format) {
  const auto found = enumerate_p_positions(n, max_sum);
  if (format == "json") {
    json arr = json::array();
    for (const Position& p : found) arr.push_back(to_json(p));
    print_json(json{{"piles", n}, {"max_sum", max_sum}, {"count", found.size()}, {"positions", arr}});
  } else {
    std::cout << "piles,sum,outcome\n";
    for (const Position& p : found) std::cout << csv_row(p, Outcome::P) << "\n";
  }
  return kOk;
}

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const Violation& v : vs) {
    json item{{"position", to_json(v.position)}};
    if (v.move) item["move"] = to_json(*v.move);
    arr.push_back(item);
  }
  return arr;
}

int cmd_verify(std::size_t n, Pile max_sum, bool as_json) {
  const VerificationReport r = verify(n, max_sum);
  if (as_json) {
    json mismatches = json::array();
    for (const Mismatch& m : r.mismatches)
      mismatches.push_back({{"position", to_json(m.position)}, {"classifier", to_string(m.classifier)}, {"oracle", to_string(m.oracle)}});
    print_json(json{{"n", r.n},
                    {"max_sum", r.max_sum},
                    {"positions_checked", r.positions_checked},
                    {"multisets", r.multisets},
                    {"mismatches", mismatches},
                    {"closure_violations", violations_json(r.closure_violations)},
                    {"reachability_violations", violations_json(r.reachability_violations)},
                    {"elapsed_seconds", r.elapsed.count()},
                    {"passed", r.passed()}});
  } else {
    std::cout << "piles " << r.n << ", sum <= " << r.max_sum << ": " << r.multisets << " multisets, "
              << r.positions_checked << " ordered positions in " << r.elapsed.count() << " s\n"
              << "  oracle mismatches:       " << r.mismatches.size() << "\n"
              << "  closure violations:      " << r.closure_violations.size() << "\n"
              << "  reachability violations: " << r.reachability_violations.size() << "\n";
    for (const Mismatch& m : r.mismatches)
      std::cout << "  mismatch " << format_position(m.position) << ": classifier " << to_string(m.classifier)
                << ", oracle " << to_string(m.oracle) << "\n";
    std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  return r.passed() ? kOk : kVerifyFailed;
}

int cmd_oracle(const std::optional<Position>& p, bool with_length, std::size_t n, Pile max_sum, std::size_t budget) {
  OracleTable table(budget);
  if (p) {
    Solution s = table.solve(*p);
    std::cout << to_string(s.outcome);
    if (with_length) std::cout << " " << s.length;
    std::cout << "\n";
    return kOk;
  }
  std::cout << "piles,sum,outcome,length\n";
  for (const SweepEntry& e : sweep(n, max_sum, table)) std::cout << csv_row(e.position, e.outcome, e.length) << "\n";
  return kOk;
}

int cmd_serve(std::optional<int> port_flag, const std::string& static_dir) {
  const int port = service::resolve_port(port_flag);
  httplib::Server server;
  service::register_routes(server, static_dir);
  std::cerr << "listening on http://0.0.0.0:" << port << "\n";
  if (!server.listen("0.0.0.0", port)) {
    std::cerr << "could not bind port " << port << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect play and verification for Single-delete Nim"};
  app.require_subcommand(1);

  std::string piles_text;
  bool as_json = false;

  auto* classify_cmd = app.add_subcommand("classify", "P/N outcome with the full condition report");
  classify_cmd->add_option("piles", piles_text, "comma-separated pile sizes")->required();
  classify_cmd->add_flag("--json", as_json);

  bool constructive = false;
  auto* best_cmd = app.add_subcommand("best-move", "a winning move, if one exists");
  best_cmd->add_option("piles", piles_text, "comma-separated pile sizes")->required();
  best_cmd->add_flag("--constructive", constructive, "use only the constructive rule cascade and show its label");
  best_cmd->add_flag("--json", as_json);

  std::size_t n = 4;
  Pile max_sum = 0;
  std::string format = "csv";
  auto* enum_cmd = app.add_subcommand("enumerate", "list P-positions by total stone count");
  enum_cmd->add_option("--piles", n)->required()->check(CLI::Range(2, 4));
  enum_cmd->add_option("--max-sum", max_sum)->required();
  enum_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "check the closed form against the oracle");
  verify_cmd->add_option("--piles", n)->required()->check(CLI::Range(2, 4));
  verify_cmd->add_option("--max-sum", max_sum)->required();
  verify_cmd->add_flag("--json", as_json);

  bool with_length = false;
  std::size_t node_budget = OracleTable::kDefaultBudget;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force solve one position, or sweep to CSV");
  auto* oracle_piles = oracle_cmd->add_option("position", piles_text, "comma-separated pile sizes");
  auto* sweep_n = oracle_cmd->add_option("--piles", n, "sweep: pile count")->check(CLI::Range(2, 64));
  auto* sweep_sum = oracle_cmd->add_option("--max-sum", max_sum, "sweep: largest total");
  oracle_cmd->add_flag("--length", with_length, "also print the optimal game length");
  oracle_cmd->add_option("--node-budget", node_budget);
  sweep_n->needs(sweep_sum)->excludes(oracle_piles);
  sweep_sum->needs(sweep_n);

  std::string start_text = "20,14,9,6";
  bool engine_first = false;
  Pile budget = kDefaultEngineBudget;
  auto* play_cmd = app.add_subcommand("play", "play against the engine in the terminal");
  play_cmd->add_option("--start", start_text, "starting position");
  play_cmd->add_flag("--engine-first", engine_first);
  play_cmd->add_option("--budget", budget, "largest total the engine will search exhaustively");

  std::optional<int> port;
  std::string static_dir = "webui/dist";
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP API (port also from SDNIM_PORT)");
  serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--static-dir", static_dir, "directory served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(parse_position(piles_text), as_json);
    if (*best_cmd) return cmd_best_move(parse_position(piles_text), constructive, as_json);
    if (*enum_cmd) return cmd_enumerate(n, max_sum, format);
    if (*verify_cmd) return cmd_verify(n, max_sum, as_json);
    if (*oracle_cmd) {
      if (oracle_piles->count()) return cmd_oracle(parse_position(piles_text), with_length, n, max_sum, node_budget);
      if (!sweep_n->count()) {
        std::cerr << "oracle needs a position or --piles with --max-sum\n";
        return kUsage;
      }
      return cmd_oracle(std::nullopt, with_length, n, max_sum, node_budget);
    }
    if (*play_cmd) {
      Position start = parse_position(start_text);
      Transcript t = play_session(start, !engine_first, budget, std::cin, std::cout);
      return t.aborted ? kUsage : kOk;
    }
    if (*serve_cmd) return cmd_serve(port, static_dir);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
