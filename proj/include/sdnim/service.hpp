// Stateless HTTP+JSON API. Handlers are plain functions of the request body
// so they can be exercised without a socket; register_routes wires them to
// cpp-httplib.
#pragma once

#include <httplib.h>

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <string>

#include "sdnim/classifier.hpp"
#include "sdnim/core.hpp"
#include "sdnim/json.hpp"
#include "sdnim/oracle.hpp"
#include "sdnim/strategy.hpp"

namespace sdnim::service {

struct ApiResponse {
  int status = 200;
  json body;
};

inline ApiResponse api_error(int status, std::string code, std::string message) {
  return {status, json{{"code", std::move(code)}, {"message", std::move(message)}}};
}

namespace detail {

inline json family_report(const Position& p) {
  switch (family_of(p)) {
    case Family::AllOdd: return json{{"family", "ALL_ODD"}, {"note", "every pile is odd"}};
    case Family::AllTwos:
      return json{{"family", "ALL_TWOS"}, {"note", "every pile is 2; N exactly when the pile count is 2 mod 3"}};
    default: return json{{"family", "none"}, {"note", "no closed form for this position"}};
  }
}

inline json classification_report(const Position& p) {
  switch (p.size()) {
    case 2:
      return json{{"rule", "BOTH_ODD"},
                  {"parity", {p[0] % 2 ? "odd" : "even", p[1] % 2 ? "odd" : "even"}},
                  {"holds", classify2(p[0], p[1]) == Outcome::P}};
    case 3:
      return json{{"rule", "STAR"}, {"vals", {v2(p[0]), v2(p[1]), v2(p[2])}}, {"holds", star_holds(p)}};
    case 4: return to_json(diagnose4(p));
    default: return family_report(p);
  }
}

}  // namespace detail

/// POST /api/classify
inline ApiResponse handle_classify(const json& request) {
  Position p;
  try {
    p = position_from_json(request);
  } catch (const std::exception& e) {
    return api_error(400, "bad_position", e.what());
  }
  return {200, json{{"outcome", to_string(classify(p))}, {"report", detail::classification_report(p)}}};
}

/// POST /api/moves: every canonical legal move with its result's outcome.
/// Children without a closed form are solved by the oracle when small.
inline ApiResponse handle_moves(const json& request, Pile budget = kDefaultEngineBudget) {
  Position p;
  try {
    p = position_from_json(request);
  } catch (const std::exception& e) {
    return api_error(400, "bad_position", e.what());
  }
  json moves = json::array();
  OracleTable table;
  for (const Move& m : legal_moves(p)) {
    Position next = apply_move(p, m);
    Outcome o = classify(next);
    if (o == Outcome::Unknown) {
      if (next.sum() > budget)
        return api_error(422, "unsupported_n", "no closed form for " + format_position(next) + " and it is too large for the oracle");
      try {
        o = solve(next, table);
      } catch (const BudgetExceeded& e) {
        return api_error(422, "unsupported_n", e.what());
      }
    }
    moves.push_back(json{{"move", to_json(m)}, {"resulting", to_json(next)}, {"outcome", to_string(o)}});
  }
  return {200, json{{"moves", std::move(moves)}}};
}

/// POST /api/engine-move
inline ApiResponse handle_engine_move(const json& request) {
  Position p;
  Pile budget = kDefaultEngineBudget;
  try {
    p = position_from_json(request);
    if (request.contains("budget")) {
      const json& b = request.at("budget");
      if (!b.is_number_integer() || b.get<std::int64_t>() < 0) throw std::invalid_argument("'budget' must be a non-negative integer");
      budget = b.get<Pile>();
    }
  } catch (const std::exception& e) {
    return api_error(400, "bad_position", e.what());
  }
  if (is_terminal(p)) return api_error(409, "terminal", "every pile is 1; the player to move has lost");
  try {
    return {200, json{{"advice", to_json(engine_move(p, budget))}}};
  } catch (const BudgetExceeded& e) {
    return api_error(422, "unsupported_n", e.what());
  }
}

inline ApiResponse handle_health() { return {200, json{{"status", "ok"}}}; }

/// Routes a raw request body to a POST handler; malformed JSON is a 400.
inline ApiResponse dispatch(const std::string& path, const std::string& body) {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return api_error(400, "bad_request", std::string("body is not valid JSON: ") + e.what());
  }
  if (path == "/api/classify") return handle_classify(request);
  if (path == "/api/moves") return handle_moves(request);
  if (path == "/api/engine-move") return handle_engine_move(request);
  return api_error(404, "not_found", "no endpoint " + path);
}

inline void register_routes(httplib::Server& server, const std::filesystem::path& static_dir = {}) {
  auto reply = [](httplib::Response& res, const ApiResponse& api) {
    res.status = api.status;
    res.set_content(api.body.dump() + "\n", "application/json");
  };
  for (const char* path : {"/api/classify", "/api/moves", "/api/engine-move"}) {
    server.Post(path, [reply, path = std::string(path)](const httplib::Request& req, httplib::Response& res) {
      reply(res, dispatch(path, req.body));
    });
  }
  server.Get("/api/health", [reply](const httplib::Request&, httplib::Response& res) { reply(res, handle_health()); });
  if (!static_dir.empty() && std::filesystem::is_directory(static_dir)) server.set_mount_point("/", static_dir.string());
}

/// Port from the flag when given, else SDNIM_PORT, else `fallback`.
inline int resolve_port(std::optional<int> flag, int fallback = 8080) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SDNIM_PORT")) {
    try {
      int port = std::stoi(env);
      if (port > 0 && port < 65536) return port;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("SDNIM_PORT is not a valid port: ") + env);
  }
  return fallback;
}

}  // namespace sdnim::service
