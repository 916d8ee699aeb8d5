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

#include "preplay/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "preplay/analyze.hpp"
#include "preplay/characterize.hpp"
#include "preplay/complete.hpp"
#include "preplay/document.hpp"
#include "preplay/error.hpp"
#include "preplay/offers.hpp"
#include "preplay/synth.hpp"

namespace preplay::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Game load_game(const std::string& path) { return parse_game(read_file(path), path); }

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << text)) throw ParseError(out_path + ": cannot write file");
}

Rational parse_margin(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("--margin: ") + e.what());
  }
}

Game prisoners_dilemma() {
  return make_bimatrix({"I", "II"}, {{"C", "D"}, {"C", "D"}},
                       {{{4, 4}, {0, 5}}, {{5, 0}, {1, 1}}});
}

void demo_pd(std::ostream& out) {
  const Game m0 = prisoners_dilemma();
  auto show = [&](const std::string& title, const Game& game) {
    out << title << '\n' << render_game(game);
    out << "pure Nash equilibria:";
    for (const auto& p : pure_nash(game)) out << ' ' << game.describe(p);
    out << "\n\n";
  };

  show("Prisoners' Dilemma", m0);
  const Offer first{0, 1, 0, Rational(2)};
  const Game m1 = apply_offer(m0, first);
  show("after offer " + describe_offer(m0, first), m1);
  const Offer second{1, 0, 0, Rational(2)};
  const Game m2 = apply_offer(m1, second);
  show("after offer " + describe_offer(m1, second), m2);

  out << "check original -> final: "
      << (check_equivalence(m0, m2).equivalent ? "EQUIVALENT" : "NOT-EQUIVALENT") << '\n';
  out << "synthesized offers:";
  for (const auto& offer : synthesize_offers(m0, m2).offers) out << ' ' << describe_offer(m0, offer) << ';';
  out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transform normal-form games with binding preplay offers", "preplay"};
  app.require_subcommand(1);

  std::string game_path;
  std::string second_path;
  std::string out_path;
  std::string profile_text;
  std::string base_text;
  std::string margin_text = "1";
  std::string demo_name;
  bool strict = false;
  bool nonnegative = false;
  bool as_json = false;

  auto* apply_cmd = app.add_subcommand("apply", "Apply an offer set to a game");
  apply_cmd->add_option("GAME", game_path, "Game document")->required();
  apply_cmd->add_option("OFFERS", second_path, "Offer document")->required();
  apply_cmd->add_option("-o,--output", out_path, "Write the transformed game here");
  apply_cmd->add_flag("--strict", strict, "Reject negative offer amounts");

  auto* check_cmd = app.add_subcommand("check", "Decide whether TARGET is reachable from GAME");
  check_cmd->add_option("GAME", game_path, "Source game document")->required();
  check_cmd->add_option("TARGET", second_path, "Target game document")->required();

  auto* synth_cmd = app.add_subcommand("synth", "Find offers turning GAME into TARGET");
  synth_cmd->add_option("GAME", game_path, "Source game document")->required();
  synth_cmd->add_option("TARGET", second_path, "Target game document")->required();
  synth_cmd->add_flag("--nonnegative", nonnegative, "Rewrite threats as nonnegative offers");
  synth_cmd->add_option("-o,--output", out_path, "Write the offer document here");

  auto* complete_cmd = app.add_subcommand("complete", "Extend a star seed to a full target game");
  complete_cmd->add_option("GAME", game_path, "Source game document")->required();
  complete_cmd->add_option("SEED", second_path, "Seed document (null for unspecified cells)")
      ->required();
  complete_cmd->add_option("--base", base_text, "Center of the star, e.g. C,D (default: first strategies)");
  complete_cmd->add_option("-o,--output", out_path, "Write the completed game here");

  auto* invert_cmd = app.add_subcommand("invert", "Nonnegative inverse of an offer set");
  invert_cmd->add_option("GAME", game_path, "Game document")->required();
  invert_cmd->add_option("OFFERS", second_path, "Offer document")->required();
  invert_cmd->add_option("-o,--output", out_path, "Write the inverse offers here");
  invert_cmd->add_flag("--strict", strict, "Reject negative offer amounts");

  auto* dominate_cmd = app.add_subcommand("dominate", "Offers making a profile strictly dominant");
  dominate_cmd->add_option("GAME", game_path, "Game document")->required();
  dominate_cmd->add_option("--profile", profile_text, "Target profile, e.g. C,C")->required();
  dominate_cmd->add_option("--margin", margin_text, "Minimum dominance margin (default 1)");
  dominate_cmd->add_option("-o,--output", out_path, "Write the offer document here");

  auto* analyze_cmd = app.add_subcommand("analyze", "Equilibria, dominance and Pareto report");
  analyze_cmd->add_option("GAME", game_path, "Game document")->required();
  analyze_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* demo_cmd = app.add_subcommand("demo", "Replay a worked example");
  demo_cmd->add_option("NAME", demo_name, "Example name")->required()->check(CLI::IsMember({"pd"}));

  std::vector<std::string> argv_storage{"preplay"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputFailure;
  }

  try {
    if (apply_cmd->parsed()) {
      const Game game = load_game(game_path);
      const OfferSet offers = parse_offers(read_file(second_path), game, second_path, strict);
      emit(serialize_game(apply_offer_set(game, offers)), out_path, out);
    } else if (check_cmd->parsed()) {
      const Game source = load_game(game_path);
      const Game target = load_game(second_path);
      const EquivalenceVerdict verdict = check_equivalence(source, target);
      if (verdict.equivalent) {
        out << "EQUIVALENT\n";
        return kExitOk;
      }
      out << "NOT-EQUIVALENT: " << describe_violation(source, *verdict.violation) << '\n';
      return kExitDomainFailure;
    } else if (synth_cmd->parsed()) {
      const Game source = load_game(game_path);
      const Game target = load_game(second_path);
      try {
        OfferSet offers = synthesize_offers(source, target).offers;
        if (nonnegative) offers = nonnegative_decomposition(offers, source.shape());
        emit(serialize_offers(source, offers), out_path, out);
      } catch (const NotEquivalentError& e) {
        err << "NOT-EQUIVALENT: " << describe_violation(source, *e.verdict().violation) << '\n';
        return kExitDomainFailure;
      }
    } else if (complete_cmd->parsed()) {
      const Game source = load_game(game_path);
      const Profile base = base_text.empty() ? Profile(source.player_count(), 0)
                                             : parse_profile(base_text, source);
      const Seed seed = parse_seed(read_file(second_path), source, base, second_path);
      emit(serialize_game(complete_from_seed(source, seed)), out_path, out);
    } else if (invert_cmd->parsed()) {
      const Game game = load_game(game_path);
      const OfferSet offers = parse_offers(read_file(second_path), game, second_path, strict);
      emit(serialize_offers(game, invert_offer_set(offers, game.shape())), out_path, out);
    } else if (dominate_cmd->parsed()) {
      const Game game = load_game(game_path);
      const Profile profile = parse_profile(profile_text, game);
      const Rational margin = parse_margin(margin_text);
      emit(serialize_offers(game, make_profile_dominant(game, profile, margin)), out_path, out);
    } else if (analyze_cmd->parsed()) {
      const Game game = load_game(game_path);
      const AnalysisReport report = analyze(game);
      out << (as_json ? serialize_analysis(game, report) : render_analysis(game, report));
    } else if (demo_cmd->parsed()) {
      demo_pd(out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitDomainFailure;
  }
  return kExitOk;
}

}  // namespace preplay::cli
