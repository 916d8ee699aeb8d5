// Copyright 2026 The Preplay Authors
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

#include "preplay/document.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "preplay/error.hpp"

namespace preplay {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

class Reader {
 public:
  explicit Reader(std::string_view source_name) : source_(source_name) {}

  [[noreturn]] void fail(const std::string& path, const std::string& message) const {
    throw ParseError(source_ + ": at " + (path.empty() ? std::string("/") : path) + ": " + message);
  }

  json parse(std::string_view text) const {
    try {
      return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
      throw ParseError(source_ + ": " + e.what());
    }
  }

  const json& member(const json& object, const std::string& key, const std::string& path) const {
    if (!object.contains(key)) fail(path, "missing \"" + key + "\"");
    return object.at(key);
  }

  void check_keys(const json& object, const std::set<std::string>& allowed,
                  const std::string& path) const {
    for (const auto& item : object.items()) {
      if (!allowed.contains(item.key())) fail(path, "unexpected key \"" + item.key() + "\"");
    }
  }

  void check_schema(const json& root) const {
    if (!root.is_object()) fail("", "expected a JSON object");
    if (!root.contains("schema_version")) return;
    const json& version = root.at("schema_version");
    if (!version.is_number_integer() || version.get<std::int64_t>() != kSchemaVersion) {
      fail("/schema_version", "unsupported schema version " + version.dump());
    }
  }

  std::string string_at(const json& value, const std::string& path) const {
    if (!value.is_string()) fail(path, "expected a string, got " + value.dump());
    return value.get<std::string>();
  }

  std::vector<std::string> strings_at(const json& value, const std::string& path) const {
    if (!value.is_array()) fail(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
      out.push_back(string_at(value[i], path + "/" + std::to_string(i)));
    }
    return out;
  }

  Rational rational_at(const json& value, const std::string& path) const {
    try {
      if (value.is_number_unsigned()) return Rational::parse(std::to_string(value.get<std::uint64_t>()));
      if (value.is_number_integer()) return Rational::parse(std::to_string(value.get<std::int64_t>()));
      if (value.is_string()) return Rational::parse(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
    if (value.is_number_float()) {
      fail(path, "non-integer numbers must be quoted, e.g. \"0.5\" or \"1/3\"");
    }
    fail(path, "expected a rational, got " + value.dump());
  }

  using CellVisitor = std::function<void(const Profile&, const json&, const std::string&)>;

  // Walks the nested payoff arrays, one level per player.
  void walk_cells(const json& node, const std::vector<std::size_t>& counts, Profile& profile,
                  std::size_t level, const std::string& path, const CellVisitor& visit) const {
    if (level == counts.size()) {
      visit(profile, node, path);
      return;
    }
    if (!node.is_array()) fail(path, "expected an array of " + std::to_string(counts[level]) + " entries");
    if (node.size() != counts[level]) {
      fail(path, "expected " + std::to_string(counts[level]) + " entries, found " +
                     std::to_string(node.size()));
    }
    for (std::size_t s = 0; s < counts[level]; ++s) {
      profile[level] = s;
      walk_cells(node[s], counts, profile, level + 1, path + "/" + std::to_string(s), visit);
    }
  }

  std::vector<Rational> vector_at(const json& cell, std::size_t n, const std::string& path) const {
    if (!cell.is_array() || cell.size() != n) {
      fail(path, "expected " + std::to_string(n) + " payoffs, got " + cell.dump());
    }
    std::vector<Rational> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(rational_at(cell[k], path + "/" + std::to_string(k)));
    return out;
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

struct Header {
  std::vector<std::string> players;
  std::vector<std::vector<std::string>> strategies;
  std::vector<std::size_t> counts;
};

Header read_header(const Reader& reader, const json& root) {
  reader.check_schema(root);
  reader.check_keys(root, {"schema_version", "players", "strategies", "payoffs"}, "");
  Header header;
  header.players = reader.strings_at(reader.member(root, "players", ""), "/players");
  if (header.players.empty()) reader.fail("/players", "a game needs at least one player");
  const json& strategies = reader.member(root, "strategies", "");
  if (!strategies.is_array() || strategies.size() != header.players.size()) {
    reader.fail("/strategies", "expected one strategy list per player");
  }
  for (std::size_t k = 0; k < strategies.size(); ++k) {
    header.strategies.push_back(reader.strings_at(strategies[k], "/strategies/" + std::to_string(k)));
    if (header.strategies.back().empty()) {
      reader.fail("/strategies/" + std::to_string(k), "a player needs at least one strategy");
    }
    header.counts.push_back(header.strategies.back().size());
  }
  return header;
}

std::string quoted(const std::string& text) { return json(text).dump(); }

std::string quoted_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += ", ";
    out += quoted(items[i]);
  }
  return out + "]";
}

void emit_payoffs(const Game& game, std::size_t level, Profile& profile, const std::string& indent,
                  std::ostringstream& out) {
  const std::size_t n = game.player_count();
  const std::size_t m = game.strategy_count(level);
  if (level + 1 == n) {
    out << '[';
    for (std::size_t s = 0; s < m; ++s) {
      profile[level] = s;
      if (s > 0) out << ", ";
      out << '[';
      const auto values = game.payoffs(profile);
      for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) out << ", ";
        out << quoted(values[k].to_string());
      }
      out << ']';
    }
    out << ']';
    return;
  }
  out << "[\n";
  for (std::size_t s = 0; s < m; ++s) {
    profile[level] = s;
    out << indent << "  ";
    emit_payoffs(game, level + 1, profile, indent + "  ", out);
    out << (s + 1 < m ? ",\n" : "\n");
  }
  out << indent << ']';
}

std::vector<std::string> profile_names(const Game& game, const Profile& profile) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < profile.size(); ++k) names.push_back(game.strategy_name(k, profile[k]));
  return names;
}

}  // namespace

Game parse_game(std::string_view text, std::string_view source_name) {
  const Reader reader(source_name);
  const json root = reader.parse(text);
  Header header = read_header(reader, root);
  const std::size_t n = header.players.size();

  std::vector<PayoffEntry> entries;
  Profile profile(n, 0);
  reader.walk_cells(reader.member(root, "payoffs", ""), header.counts, profile, 0, "/payoffs",
                    [&](const Profile& p, const json& cell, const std::string& path) {
                      entries.push_back({p, reader.vector_at(cell, n, path)});
                    });
  try {
    return make_game(std::move(header.players), std::move(header.strategies), entries);
  } catch (const Error& e) {
    throw ParseError(reader.source() + ": " + e.what());
  }
}

std::string serialize_game(const Game& game) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << kSchemaVersion << ",\n";
  out << "  \"players\": " << quoted_list(game.players()) << ",\n";
  out << "  \"strategies\": [";
  for (std::size_t k = 0; k < game.player_count(); ++k) {
    if (k > 0) out << ", ";
    out << quoted_list(game.strategies()[k]);
  }
  out << "],\n";
  out << "  \"payoffs\": ";
  Profile profile(game.player_count(), 0);
  emit_payoffs(game, 0, profile, "  ", out);
  out << "\n}\n";
  return out.str();
}

OfferSet parse_offers(std::string_view text, const Game& game, std::string_view source_name,
                      bool strict) {
  const Reader reader(source_name);
  const json root = reader.parse(text);
  const json* list = &root;
  std::string base_path;
  if (root.is_object()) {
    reader.check_schema(root);
    reader.check_keys(root, {"schema_version", "offers"}, "");
    list = &reader.member(root, "offers", "");
    base_path = "/offers";
  }
  if (!list->is_array()) reader.fail(base_path, "expected an array of offers");

  OfferSet offers;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const std::string path = base_path + "/" + std::to_string(i);
    const json& item = (*list)[i];
    if (!item.is_object()) reader.fail(path, "expected an offer object");
    reader.check_keys(item, {"payer", "payee", "strategy", "amount"}, path);
    const std::string payer = reader.string_at(reader.member(item, "payer", path), path + "/payer");
    const std::string payee = reader.string_at(reader.member(item, "payee", path), path + "/payee");
    const std::string strategy =
        reader.string_at(reader.member(item, "strategy", path), path + "/strategy");
    const Rational amount = reader.rational_at(reader.member(item, "amount", path), path + "/amount");

    const auto payer_index = game.find_player(payer);
    if (!payer_index) reader.fail(path + "/payer", "UnknownPlayer: \"" + payer + "\"");
    const auto payee_index = game.find_player(payee);
    if (!payee_index) reader.fail(path + "/payee", "UnknownPlayer: \"" + payee + "\"");
    if (*payer_index == *payee_index) reader.fail(path, "SelfOffer: \"" + payer + "\" pays themself");
    const auto strategy_index = game.find_strategy(*payee_index, strategy);
    if (!strategy_index) {
      reader.fail(path + "/strategy", "UnknownStrategy: \"" + strategy + "\" is not a strategy of " + payee);
    }
    if (strict && amount.sign() < 0) {
      reader.fail(path + "/amount", "NegativeAmount: " + amount.to_string() + " (strict mode)");
    }
    offers.add(Offer{*payer_index, *payee_index, *strategy_index, amount});
  }
  return offers;
}

std::string serialize_offers(const Game& game, const OfferSet& offers) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"schema_version\": " << kSchemaVersion << ",\n";
  if (offers.empty()) {
    out << "  \"offers\": []\n}\n";
    return out.str();
  }
  out << "  \"offers\": [\n";
  for (std::size_t i = 0; i < offers.size(); ++i) {
    const Offer& offer = offers.offers()[i];
    out << "    {\"payer\": " << quoted(game.player_name(offer.payer))
        << ", \"payee\": " << quoted(game.player_name(offer.payee))
        << ", \"strategy\": " << quoted(game.strategy_name(offer.payee, offer.strategy))
        << ", \"amount\": " << quoted(offer.amount.to_string()) << '}'
        << (i + 1 < offers.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

Seed parse_seed(std::string_view text, const Game& source, const Profile& base,
                std::string_view source_name) {
  const Reader reader(source_name);
  const json root = reader.parse(text);
  const Header header = read_header(reader, root);
  if (header.players != source.players() || header.strategies != source.strategies()) {
    reader.fail("", "NameMismatch: players or strategies differ from the source game");
  }
  const std::size_t n = header.players.size();
  Seed seed{base, {}};
  Profile profile(n, 0);
  reader.walk_cells(reader.member(root, "payoffs", ""), header.counts, profile, 0, "/payoffs",
                    [&](const Profile& p, const json& cell, const std::string& path) {
                      if (cell.is_null()) return;
                      seed.assignments.emplace(p, reader.vector_at(cell, n, path));
                    });
  return seed;
}

Profile parse_profile(std::string_view text, const Game& game) {
  std::vector<std::string> names;
  std::string current;
  for (const char ch : text) {
    if (ch == ',') {
      names.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  names.push_back(current);
  if (names.size() != game.player_count()) {
    throw ParseError("profile \"" + std::string(text) + "\" needs " +
                     std::to_string(game.player_count()) + " comma-separated strategies");
  }
  Profile profile(names.size());
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto s = game.find_strategy(k, names[k]);
    if (!s) {
      throw ParseError("profile \"" + std::string(text) + "\": \"" + names[k] +
                       "\" is not a strategy of " + game.player_name(k));
    }
    profile[k] = *s;
  }
  return profile;
}

std::string render_game(const Game& game) {
  const std::size_t n = game.player_count();
  std::ostringstream out;
  auto cell_text = [&](const Profile& p) {
    std::string text;
    const auto values = game.payoffs(p);
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (k > 0) text += ',';
      text += values[k].to_string();
    }
    return text;
  };

  if (n == 1) {
    for (std::size_t s = 0; s < game.strategy_count(0); ++s) {
      out << game.strategy_name(0, s) << " | " << cell_text({s}) << '\n';
    }
    return out.str();
  }

  // One table per assignment of players 3..N.
  std::vector<std::size_t> tail_counts(game.shape().strategy_counts().begin() + 2,
                                       game.shape().strategy_counts().end());
  Profile tail(n - 2, 0);
  bool first_slice = true;
  while (true) {
    if (n > 2) {
      if (!first_slice) out << '\n';
      out << '[';
      for (std::size_t k = 2; k < n; ++k) {
        if (k > 2) out << ", ";
        out << game.player_name(k) << " = " << game.strategy_name(k, tail[k - 2]);
      }
      out << "]\n";
    }
    first_slice = false;

    const std::size_t rows = game.strategy_count(0);
    const std::size_t cols = game.strategy_count(1);
    std::vector<std::vector<std::string>> grid(rows + 1, std::vector<std::string>(cols + 1));
    grid[0][0] = game.player_name(0) + "\\" + game.player_name(1);
    for (std::size_t j = 0; j < cols; ++j) grid[0][j + 1] = game.strategy_name(1, j);
    for (std::size_t i = 0; i < rows; ++i) {
      grid[i + 1][0] = game.strategy_name(0, i);
      for (std::size_t j = 0; j < cols; ++j) {
        Profile p{i, j};
        p.insert(p.end(), tail.begin(), tail.end());
        grid[i + 1][j + 1] = cell_text(p);
      }
    }
    std::vector<std::size_t> width(cols + 1, 0);
    for (const auto& row : grid) {
      for (std::size_t c = 0; c <= cols; ++c) width[c] = std::max(width[c], row[c].size());
    }
    for (const auto& row : grid) {
      std::string line;
      for (std::size_t c = 0; c <= cols; ++c) {
        if (c > 0) line += " | ";
        line += row[c] + std::string(width[c] - row[c].size(), ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }

    // Advance the trailing players' profile.
    std::size_t k = tail.size();
    while (k > 0) {
      --k;
      if (++tail[k] < tail_counts[k]) break;
      tail[k] = 0;
      if (k == 0) return out.str();
    }
    if (tail.empty()) return out.str();
  }
}

std::string render_analysis(const Game& game, const AnalysisReport& report) {
  std::ostringstream out;
  auto list = [&](const std::vector<Profile>& profiles) {
    if (profiles.empty()) return std::string("none");
    std::string text;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      if (i > 0) text += ' ';
      text += game.describe(profiles[i]);
    }
    return text;
  };

  out << "pure Nash equilibria: " << list(report.pure_nash) << '\n';
  out << "dominance:\n";
  for (std::size_t k = 0; k < game.player_count(); ++k) {
    const Dominance& d = report.dominance[k];
    if (d.weak.empty()) {
      out << "  " << game.player_name(k) << ": none\n";
      continue;
    }
    for (const auto& [s, t] : d.weak) {
      out << "  " << game.player_name(k) << ": " << game.strategy_name(k, s)
          << (d.strict.contains({s, t}) ? " strictly" : " weakly") << " dominates "
          << game.strategy_name(k, t) << '\n';
    }
  }
  out << "constant sum: " << (report.constant_sum ? report.constant_sum->to_string() : "none") << '\n';
  out << "Pareto optimal: " << list(report.pareto_optimal) << '\n';
  out << "strictly dominant profile: "
      << (report.strictly_dominant_profile ? game.describe(*report.strictly_dominant_profile) : "none")
      << '\n';
  return out.str();
}

std::string serialize_analysis(const Game& game, const AnalysisReport& report) {
  ordered_json doc;
  auto profiles = [&](const std::vector<Profile>& list) {
    ordered_json array = ordered_json::array();
    for (const auto& p : list) array.push_back(profile_names(game, p));
    return array;
  };
  doc["pure_nash"] = profiles(report.pure_nash);
  ordered_json dom = ordered_json::object();
  for (std::size_t k = 0; k < game.player_count(); ++k) {
    ordered_json pairs = ordered_json::array();
    for (const auto& [s, t] : report.dominance[k].weak) {
      pairs.push_back({{"dominant", game.strategy_name(k, s)},
                       {"dominated", game.strategy_name(k, t)},
                       {"strict", report.dominance[k].strict.contains({s, t})}});
    }
    dom[game.player_name(k)] = pairs;
  }
  doc["dominance"] = dom;
  doc["constant_sum"] =
      report.constant_sum ? ordered_json(report.constant_sum->to_string()) : ordered_json(nullptr);
  doc["pareto_optimal"] = profiles(report.pareto_optimal);
  doc["strictly_dominant_profile"] = report.strictly_dominant_profile
                                         ? ordered_json(profile_names(game, *report.strictly_dominant_profile))
                                         : ordered_json(nullptr);
  return doc.dump(2) + "\n";
}

}  // namespace preplay
