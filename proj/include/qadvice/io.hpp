// Copyright 2026 The qadvice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QADVICE_IO_HPP_
#define QADVICE_IO_HPP_

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qadvice/behavior.hpp"
#include "qadvice/errors.hpp"
#include "qadvice/game.hpp"
#include "qadvice/quantum.hpp"
#include "qadvice/rational.hpp"

namespace qadvice {

using Json = nlohmann::ordered_json;

// Malformed document: carries a 1-based line and column.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : ValidationError(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace io_detail {

inline Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string reason = e.what();
    if (auto pos = reason.find(": syntax error"); pos != std::string::npos) reason = reason.substr(pos + 2);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + reason,
                     line, column);
  }
}

inline const Json& field(const Json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw ValidationError(where + " must be an object");
  auto it = object.find(key);
  if (it == object.end()) throw ValidationError(where + " is missing \"" + key + "\"");
  return *it;
}

inline std::vector<std::string> strings(const Json& value, const std::string& where) {
  if (!value.is_array()) throw ValidationError(where + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) throw ValidationError(where + " must be a list of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline Rational rational(const Json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return Rational(value.get<long long>());
  throw ValidationError(where + " must be a \"num/den\" string");
}

inline double real(const Json& value, const std::string& where) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return to_double(rational(value, where));
  throw ValidationError(where + " must be a number");
}

// Joint index of a list of per-player symbols.
inline std::size_t joint(const Json& value, const std::vector<Player>& players, bool input,
                         const MixedRadix& radix, const std::string& where) {
  const auto symbols = strings(value, where);
  if (symbols.size() != players.size()) {
    throw ValidationError(where + " has " + std::to_string(symbols.size()) + " symbols, expected " +
                          std::to_string(players.size()));
  }
  std::vector<int> digits;
  for (std::size_t p = 0; p < players.size(); ++p) {
    const auto& alphabet = input ? players[p].inputs : players[p].outputs;
    auto it = std::find(alphabet.begin(), alphabet.end(), symbols[p]);
    if (it == alphabet.end()) {
      throw ValidationError(where + ": \"" + symbols[p] + "\" is not an " + (input ? "input" : "output") +
                            " of " + players[p].name);
    }
    digits.push_back(static_cast<int>(it - alphabet.begin()));
  }
  return radix.index(digits);
}

inline Json symbols_of(const std::vector<Player>& players, const MixedRadix& radix, std::size_t index,
                       bool input) {
  Json out = Json::array();
  for (int p = 0; p < radix.positions(); ++p) {
    const auto& alphabet = input ? players[p].inputs : players[p].outputs;
    out.push_back(alphabet[radix.digit(index, p)]);
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

inline Complex complex_value(const Json& value, const std::string& where) {
  if (value.is_number()) return {value.get<double>(), 0.0};
  if (!value.is_array() || value.size() != 2 || !value[0].is_number() || !value[1].is_number()) {
    throw ValidationError(where + " must be a [re, im] pair");
  }
  return {value[0].get<double>(), value[1].get<double>()};
}

inline QubitOperator operator_value(const Json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2) throw ValidationError(where + " must be a 2x2 matrix");
  QubitOperator out;
  for (int r = 0; r < 2; ++r) {
    if (!value[r].is_array() || value[r].size() != 2) throw ValidationError(where + " must be a 2x2 matrix");
    for (int c = 0; c < 2; ++c) {
      out(r, c) = complex_value(value[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  return out;
}

inline Json operator_json(const QubitOperator& op) {
  Json out = Json::array();
  for (int r = 0; r < 2; ++r) out.push_back(Json::array({complex_json(op(r, 0)), complex_json(op(r, 1))}));
  return out;
}

}  // namespace io_detail

// Game document:
//   {"name": ..., "players": [names], "inputs": [[symbols] per player],
//    "outputs": [[symbols] per player],
//    "prior": [{"x": [symbols], "p": "num/den"}, ...],
//    "payoffs": [{"x": [...], "y": [...], "pay": ["num/den" per player]}, ...]}
// Omitted prior entries are 0 and omitted payoff rows are all-zero.
inline Game game_from_json(const Json& doc, const std::string& default_name = "game") {
  using namespace io_detail;
  if (!doc.is_object()) throw ValidationError("game document must be an object");
  const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>()
                                                                           : default_name;
  const auto names = strings(field(doc, "players", "game"), "\"players\"");
  const Json& inputs = field(doc, "inputs", "game");
  const Json& outputs = field(doc, "outputs", "game");
  if (!inputs.is_array() || inputs.size() != names.size() || !outputs.is_array() ||
      outputs.size() != names.size()) {
    throw ValidationError("\"inputs\" and \"outputs\" need one symbol list per player");
  }
  std::vector<Player> players;
  for (std::size_t p = 0; p < names.size(); ++p) {
    Player player{names[p], strings(inputs[p], "\"inputs\"[" + std::to_string(p) + "]"),
                  strings(outputs[p], "\"outputs\"[" + std::to_string(p) + "]")};
    for (const auto* alphabet : {&player.inputs, &player.outputs}) {
      std::vector<std::string> sorted = *alphabet;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("player " + player.name + " repeats a symbol");
      }
    }
    players.push_back(std::move(player));
  }
  if (players.size() < 2 || players.size() > 3) {
    throw ValidationError("games must have 2 or 3 players, got " + std::to_string(players.size()));
  }
  std::vector<int> in_radix, out_radix;
  for (const auto& p : players) {
    in_radix.push_back(static_cast<int>(p.inputs.size()));
    out_radix.push_back(static_cast<int>(p.outputs.size()));
    if (p.inputs.empty() || p.outputs.empty()) throw ValidationError("player " + p.name + " has an empty alphabet");
  }
  const MixedRadix in(in_radix), out(out_radix);

  std::vector<Rational> prior(in.size(), Rational(0));
  std::vector<bool> seen_prior(in.size(), false);
  const Json& prior_doc = field(doc, "prior", "game");
  if (!prior_doc.is_array()) throw ValidationError("\"prior\" must be a list");
  for (std::size_t k = 0; k < prior_doc.size(); ++k) {
    const std::string where = "\"prior\"[" + std::to_string(k) + "]";
    const std::size_t x = joint(field(prior_doc[k], "x", where), players, true, in, where + ".x");
    if (seen_prior[x]) throw ValidationError(where + " repeats an input");
    seen_prior[x] = true;
    prior[x] = rational(field(prior_doc[k], "p", where), where + ".p");
  }

  const std::size_t n = players.size();
  std::vector<Rational> payoffs(in.size() * out.size() * n, Rational(0));
  std::vector<bool> seen_row(in.size() * out.size(), false);
  const Json& pay_doc = field(doc, "payoffs", "game");
  if (!pay_doc.is_array()) throw ValidationError("\"payoffs\" must be a list");
  for (std::size_t k = 0; k < pay_doc.size(); ++k) {
    const std::string where = "\"payoffs\"[" + std::to_string(k) + "]";
    const std::size_t x = joint(field(pay_doc[k], "x", where), players, true, in, where + ".x");
    const std::size_t y = joint(field(pay_doc[k], "y", where), players, false, out, where + ".y");
    const Json& pay = field(pay_doc[k], "pay", where);
    if (!pay.is_array() || pay.size() != n) {
      throw ValidationError(where + ".pay needs " + std::to_string(n) + " entries");
    }
    if (seen_row[x * out.size() + y]) throw ValidationError(where + " repeats an (x, y) row");
    seen_row[x * out.size() + y] = true;
    for (std::size_t i = 0; i < n; ++i) {
      payoffs[(x * out.size() + y) * n + i] = rational(pay[i], where + ".pay[" + std::to_string(i) + "]");
    }
  }
  return Game(name, std::move(players), std::move(prior), std::move(payoffs));
}

// Canonical form: fields in fixed order, prior and payoff rows in index
// order, zero entries omitted.
inline Json game_to_json(const Game& game) {
  using namespace io_detail;
  Json doc;
  doc["name"] = game.name();
  Json names = Json::array(), inputs = Json::array(), outputs = Json::array();
  for (const auto& p : game.players()) {
    names.push_back(p.name);
    inputs.push_back(p.inputs);
    outputs.push_back(p.outputs);
  }
  doc["players"] = names;
  doc["inputs"] = inputs;
  doc["outputs"] = outputs;
  Json prior = Json::array();
  for (std::size_t x = 0; x < game.inputs().size(); ++x) {
    if (game.prior(x) == 0) continue;
    prior.push_back(Json{{"x", symbols_of(game.players(), game.inputs(), x, true)},
                         {"p", format_rational(game.prior(x))}});
  }
  doc["prior"] = prior;
  Json payoffs = Json::array();
  const int n = game.player_count();
  for (std::size_t x = 0; x < game.inputs().size(); ++x) {
    for (std::size_t y = 0; y < game.outputs().size(); ++y) {
      bool zero = true;
      Json pay = Json::array();
      for (int i = 0; i < n; ++i) {
        zero = zero && game.payoff(x, y, i) == 0;
        pay.push_back(format_rational(game.payoff(x, y, i)));
      }
      if (zero) continue;
      payoffs.push_back(Json{{"x", symbols_of(game.players(), game.inputs(), x, true)},
                             {"y", symbols_of(game.players(), game.outputs(), y, false)},
                             {"pay", pay}});
    }
  }
  doc["payoffs"] = payoffs;
  return doc;
}

inline Game parse_game_text(const std::string& text, const std::string& source = "<input>",
                            const std::string& default_name = "game") {
  return game_from_json(io_detail::parse_text(text, source), default_name);
}

inline Game parse_game_file(const std::filesystem::path& path) {
  return parse_game_text(io_detail::read_file(path), path.string(), path.stem().string());
}

inline std::string serialize_game(const Game& game) { return game_to_json(game).dump(2) + "\n"; }

// 64-bit FNV-1a of the compact canonical form, as 16 hex digits.
inline std::string game_hash(const Game& game) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : game_to_json(game).dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

// Strategy document:
//   {"state": [[re, im] x 2^n],
//    "measurements": [[{"M0": 2x2, "M1": 2x2} per input] per player]}
// Matrix entries are [re, im] pairs (a bare number is a real entry).
inline QuantumStrategy strategy_from_json(const Json& doc) {
  using namespace io_detail;
  const Json& state = field(doc, "state", "strategy");
  if (!state.is_array()) throw ValidationError("\"state\" must be a list of amplitudes");
  Eigen::VectorXcd amplitudes(static_cast<Eigen::Index>(state.size()));
  for (std::size_t k = 0; k < state.size(); ++k) {
    amplitudes(static_cast<Eigen::Index>(k)) = complex_value(state[k], "\"state\"[" + std::to_string(k) + "]");
  }
  const Json& families = field(doc, "measurements", "strategy");
  if (!families.is_array()) throw ValidationError("\"measurements\" must be a list per player");
  std::vector<std::vector<BinaryMeasurement>> measurements;
  for (std::size_t p = 0; p < families.size(); ++p) {
    std::vector<BinaryMeasurement> family;
    if (!families[p].is_array()) throw ValidationError("\"measurements\" must be a list per player");
    for (std::size_t x = 0; x < families[p].size(); ++x) {
      const std::string where = "\"measurements\"[" + std::to_string(p) + "][" + std::to_string(x) + "]";
      family.emplace_back(operator_value(field(families[p][x], "M0", where), where + ".M0"),
                          operator_value(field(families[p][x], "M1", where), where + ".M1"));
    }
    measurements.push_back(std::move(family));
  }
  return QuantumStrategy(StateVector(amplitudes), std::move(measurements));
}

inline Json strategy_to_json(const QuantumStrategy& qs) {
  using namespace io_detail;
  Json doc;
  Json state = Json::array();
  for (Eigen::Index k = 0; k < qs.state().dimension(); ++k) state.push_back(complex_json(qs.state().amplitude(k)));
  doc["state"] = state;
  Json families = Json::array();
  for (const auto& family : qs.measurements()) {
    Json list = Json::array();
    for (const auto& m : family) list.push_back(Json{{"M0", operator_json(m.effect(0))}, {"M1", operator_json(m.effect(1))}});
    families.push_back(list);
  }
  doc["measurements"] = families;
  return doc;
}

inline QuantumStrategy parse_strategy_file(const std::filesystem::path& path) {
  return strategy_from_json(io_detail::parse_text(io_detail::read_file(path), path.string()));
}

// Behavior document:
//   {"behavior": [{"x": [symbols], "y": [symbols], "p": "num/den" or number}, ...]}
// Every input that appears gets a column; omitted (x, y) cells in it are 0.
inline RealBehavior behavior_from_json(const Json& doc, const Game& game) {
  using namespace io_detail;
  const Json& rows = field(doc, "behavior", "behavior document");
  if (!rows.is_array()) throw ValidationError("\"behavior\" must be a list");
  RealBehavior behavior = RealBehavior::for_game(game);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const std::string where = "\"behavior\"[" + std::to_string(k) + "]";
    const std::size_t x = joint(field(rows[k], "x", where), game.players(), true, game.inputs(), where + ".x");
    const std::size_t y = joint(field(rows[k], "y", where), game.players(), false, game.outputs(), where + ".y");
    const double p = real(field(rows[k], "p", where), where + ".p");
    if (!behavior.defined(x)) behavior.clear_column(x);
    behavior.set(x, y, p);
  }
  for (std::size_t x = 0; x < game.inputs().size(); ++x) {
    if (behavior.defined(x) && behavior.column_error(x) > 1e-9) {
      throw ValidationError("behavior column x=" + game.input_label(x) + " is not a distribution (error " +
                            std::to_string(behavior.column_error(x)) + ")");
    }
  }
  return behavior;
}

inline RealBehavior parse_behavior_file(const std::filesystem::path& path, const Game& game) {
  return behavior_from_json(io_detail::parse_text(io_detail::read_file(path), path.string()), game);
}

}  // namespace qadvice

#endif  // QADVICE_IO_HPP_
