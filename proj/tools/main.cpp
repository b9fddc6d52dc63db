#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "recgame/dynamics.hpp"
#include "recgame/game_io.hpp"
#include "recgame/generators.hpp"
#include "recgame/metrics.hpp"
#include "recgame/utility_min.hpp"

namespace {

using namespace recgame;
using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;        // analysis completed
constexpr int kInvalid = 1;   // bad arguments, unreadable or invalid input
constexpr int kLimited = 2;   // analysis limitation: no equilibrium, cap exceeded

// ---------------------------------------------------------------------------
// Report plumbing. Every subcommand produces one Table; identical invocations
// render to byte-identical CSV or JSON.

struct Cell {
  std::string csv;
  ordered_json json;
};

Cell text_cell(std::string s) {
  Cell c;
  c.json = s;
  c.csv = std::move(s);
  return c;
}

Cell int_cell(std::int64_t v) { return {std::to_string(v), ordered_json(v)}; }

Cell value_cell(const Rational& v) {
  Cell c;
  c.csv = v.fraction_str() + " (" + v.decimal_str() + ")";
  c.json = ordered_json{{"fraction", v.fraction_str()}, {"decimal", v.decimal_str()}};
  return c;
}

Cell value_cell(double v) { return {decimal12(v), ordered_json(v)}; }

Cell fixed_cell(double v, const char* format) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return {buf, ordered_json(v)};
}

struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> header;  // echoed run spec
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, std::string>> notes;  // results metadata
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Table& t) {
  std::string out = "# command: " + t.command + "\n";
  for (const auto& [key, value] : t.header) out += "# " + key + ": " + value + "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(row[i].csv);
    }
    out += '\n';
  }
  for (const auto& [key, value] : t.notes) out += "# " + key + ": " + value + "\n";
  return out;
}

std::string render_json(const Table& t) {
  ordered_json doc;
  doc["command"] = t.command;
  for (const auto& [key, value] : t.header) doc[key] = value;
  doc["rows"] = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i].json;
    doc["rows"].push_back(std::move(obj));
  }
  if (!t.notes.empty()) {
    ordered_json notes;
    for (const auto& [key, value] : t.notes) notes[key] = value;
    doc["notes"] = std::move(notes);
  }
  return doc.dump(2) + "\n";
}

int write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write \"" << out_path << "\"\n";
    return kInvalid;
  }
  file << text;
  if (!file.good()) {
    std::cerr << "error: short write to \"" << out_path << "\"\n";
    return kInvalid;
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// Run specification shared by the subcommands. CLI11 binds options straight
// into this struct; unused fields keep their defaults.

struct RunSpec {
  // game source: exactly one of these
  std::string game_path;
  std::string generator;
  // generator parameters (rational-valued ones stay strings so "0.9" is 9/10)
  std::string x = "9/10";
  std::string y = "1/2";
  std::string eps = "1/100";
  std::string delta = "1/10";
  int n = 3;
  bool personalized = false;

  std::string mediator;
  std::string profile;
  std::string plain = "0";
  std::string schedule = "round-robin";
  std::string rule = "first";
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 10000;
  std::uint64_t cap = kDefaultProfileCap;
  std::uint64_t draws = 100000;
  int games = 100;
  int trials = 8;
  int n_max = 1000;
  int samples = 256;
  std::string out;
  std::string format = "csv";
};

Table make_table(const std::string& command, const RunSpec& spec) {
  Table t;
  t.command = command;
  t.header.emplace_back("seed", std::to_string(spec.seed));
  return t;
}

int emit(const Table& t, const RunSpec& spec) {
  return write_text(spec.format == "json" ? render_json(t) : render_csv(t), spec.out);
}

// ---------------------------------------------------------------------------
// Game loading.

std::string game_label(const RunSpec& spec) {
  if (!spec.game_path.empty()) return spec.game_path;
  const std::string& g = spec.generator;
  if (g == "example") return "generator:example";
  if (g == "impossibility") return "generator:impossibility(x=" + spec.x + ",y=" + spec.y + ")";
  if (g == "tight-poa") return "generator:tight-poa(n=" + std::to_string(spec.n) + ")";
  if (g == "shapley-upoa") return "generator:shapley-upoa(eps=" + spec.eps + ")";
  if (g == "top-upoa") return "generator:top-upoa(delta=" + spec.delta + ",eps=" + spec.eps + ")";
  if (g == "random")
    return "generator:random(seed=" + std::to_string(spec.seed) + ",mode=" +
           (spec.personalized ? "personalized" : "single") + ")";
  return "generator:" + g;
}

AnyGame load_game(const RunSpec& spec) {
  if (!spec.game_path.empty()) {
    std::ifstream file(spec.game_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot read game file \"" + spec.game_path + "\"");
    std::ostringstream text;
    text << file.rdbuf();
    return parse_game(text.str());
  }
  const std::string& g = spec.generator;
  if (g.empty()) throw std::invalid_argument("one of --game or --generator is required");
  if (g == "example") return example_game();
  if (g == "impossibility") return impossibility_game(Rational::parse(spec.x), Rational::parse(spec.y));
  if (g == "tight-poa") return tight_poa_game(spec.n);
  if (g == "shapley-upoa") return shapley_upoa_game(Rational::parse(spec.eps));
  if (g == "top-upoa") return top_upoa_game(Rational::parse(spec.delta), Rational::parse(spec.eps));
  if (g == "random") {
    UniformRng rng(spec.seed);
    RandomGameOptions options;
    options.mode = spec.personalized ? GameMode::Personalized : GameMode::Single;
    return random_game(rng, options);
  }
  throw std::invalid_argument("unknown generator \"" + g +
                              "\" (expected example, impossibility, tight-poa, shapley-upoa, top-upoa, or random)");
}

MediatorKind need_mediator(const std::string& name) {
  auto kind = mediator_from_name(name);
  if (!kind)
    throw std::invalid_argument("unknown mediator \"" + name + "\" (expected top, btl, none, rand, or shapley)");
  return *kind;
}

// "l2,l3" in single mode; personalized offers join items with '+', and "-"
// is the empty offer: "l1+l3,-".
template <typename T>
StrategyProfile parse_profile(const Game<T>& game, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("--profile is required for this command");
  StrategyProfile profile;
  std::istringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    Strategy s;
    if (token != "-") {
      std::istringstream items(token);
      std::string name;
      while (std::getline(items, name, '+')) s.push_back(game.item_index(name));
      std::sort(s.begin(), s.end());
    }
    profile.choices.push_back(std::move(s));
  }
  validate_profile(game, profile);
  return profile;
}

template <typename T>
StrategyProfile first_profile(const Game<T>& game) {
  StrategyProfile profile;
  for (PlayerIndex j = 0; j < game.num_players(); ++j) profile.choices.push_back(strategy_space(game, j).front());
  return profile;
}

std::vector<Game<Rational>> random_corpus(int count, std::uint64_t seed) {
  UniformRng rng(seed);
  std::vector<Game<Rational>> games;
  games.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    RandomGameOptions options;
    options.mode = i % 2 == 0 ? GameMode::Single : GameMode::Personalized;
    games.push_back(random_game(rng, options));
  }
  return games;
}

// ---------------------------------------------------------------------------
// mediate: per-user display distribution of one profile.

template <typename T>
int run_mediate(const Game<T>& game, MediatorKind kind, const RunSpec& spec) {
  StrategyProfile profile = parse_profile(game, spec.profile);
  Table t = make_table("mediate", spec);
  t.header.emplace_back("game", game_label(spec));
  t.header.emplace_back("mediator", mediator_name(kind));
  t.header.emplace_back("profile", profile_name(game, profile));
  t.columns = {"user", "target", "probability"};
  for (UserIndex i = 0; i < game.num_users(); ++i) {
    DisplayDistribution<T> dist = display_distribution(game, kind, profile, i);
    for (PlayerIndex j = 0; j < game.num_players(); ++j)
      t.rows.push_back({text_cell(game.users[static_cast<std::size_t>(i)]),
                        text_cell(game.players[static_cast<std::size_t>(j)].name),
                        value_cell(dist.per_player[static_cast<std::size_t>(j)])});
    t.rows.push_back({text_cell(game.users[static_cast<std::size_t>(i)]), text_cell("-"), value_cell(dist.none_prob)});
  }
  return emit(t, spec);
}

// ---------------------------------------------------------------------------
// sample-check: empirical draws of the threshold sampler against the closed
// form, per user.

template <typename T>
int run_sample_check(const Game<T>& game, const RunSpec& spec) {
  StrategyProfile profile = parse_profile(game, spec.profile);
  Table t = make_table("sample-check", spec);
  t.header.emplace_back("game", game_label(spec));
  t.header.emplace_back("mediator", "shapley");
  t.header.emplace_back("profile", profile_name(game, profile));
  t.header.emplace_back("draws", std::to_string(spec.draws));
  t.columns = {"user", "draws", "tv_distance", "none_abs_error"};
  UniformRng rng(spec.seed);
  const std::size_t n = static_cast<std::size_t>(game.num_players());
  for (UserIndex i = 0; i < game.num_users(); ++i) {
    std::vector<T> sat = satisfaction_vector(game, profile, i);
    DisplayDistribution<T> exact = mediate(MediatorKind::Shapley, sat);
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::uint64_t d = 0; d < spec.draws; ++d) {
      int pick = shapley_sample(sat, rng);
      ++counts[pick < 0 ? n : static_cast<std::size_t>(pick)];
    }
    double tv = 0.0;
    for (std::size_t j = 0; j <= n; ++j) {
      double expect = numeric_traits<T>::to_double(j == n ? exact.none_prob : exact.per_player[j]);
      double empirical = static_cast<double>(counts[j]) / static_cast<double>(spec.draws);
      tv += std::fabs(empirical - expect);
    }
    double none_err = std::fabs(static_cast<double>(counts[n]) / static_cast<double>(spec.draws) -
                                numeric_traits<T>::to_double(exact.none_prob));
    t.rows.push_back({text_cell(game.users[static_cast<std::size_t>(i)]),
                      int_cell(static_cast<std::int64_t>(spec.draws)), value_cell(tv / 2), value_cell(none_err)});
  }
  return emit(t, spec);
}

// ---------------------------------------------------------------------------
// axioms: the six-axiom verdict table for one mediator.

template <typename T>
void axiom_rows(const AxiomReport<T>& report, Table& t) {
  for (Axiom axiom : kAllAxioms) {
    const auto& ce = report.counterexamples[static_cast<std::size_t>(axiom)];
    std::string detail;
    if (ce)
      detail = "user=" + ce->game.users[static_cast<std::size_t>(ce->user)] +
               " profile=" + profile_name(ce->game, ce->profile) + ": " + ce->detail;
    t.rows.push_back({text_cell(axiom_name(axiom)), text_cell(ce ? "fail" : "pass"),
                      int_cell(report.cases_checked), text_cell(detail)});
  }
}

int run_axioms(const RunSpec& spec) {
  MediatorKind kind = need_mediator(spec.mediator);
  Table t = make_table("axioms", spec);
  t.header.emplace_back("mediator", mediator_name(kind));
  t.header.emplace_back("trials", std::to_string(spec.trials));
  t.columns = {"axiom", "verdict", "cases", "counterexample"};
  UniformRng rng(spec.seed);
  if (!spec.game_path.empty() || !spec.generator.empty()) {
    t.header.emplace_back("game", game_label(spec));
    AnyGame any = load_game(spec);
    std::visit(
        [&](const auto& game) {
          using GT = std::decay_t<decltype(game)>;
          std::vector<GT> games{game};
          axiom_rows(check_axioms(kind, games, spec.trials, rng), t);
        },
        any);
  } else {
    t.header.emplace_back("games", std::to_string(spec.games));
    std::vector<Game<Rational>> games = random_corpus(spec.games, spec.seed + 1);
    axiom_rows(check_axioms(kind, games, spec.trials, rng), t);
  }
  return emit(t, spec);
}

// ---------------------------------------------------------------------------
// dynamics: one better-response walk, serialized step by step.

template <typename T>
int run_dynamics_cmd(const Game<T>& game, MediatorKind kind, const RunSpec& spec) {
  StrategyProfile initial = spec.profile.empty() ? first_profile(game) : parse_profile(game, spec.profile);
  Schedule schedule = spec.schedule == "random" ? Schedule::Random : Schedule::RoundRobin;
  ResponseRule rule = spec.rule == "best" ? ResponseRule::BestResponse : ResponseRule::FirstImprovement;
  DynamicsTrace<T> trace = run_dynamics(game, kind, initial, schedule, spec.seed, spec.max_steps, rule);

  Table t = make_table("dynamics", spec);
  t.header.emplace_back("game", game_label(spec));
  t.header.emplace_back("mediator", mediator_name(kind));
  t.header.emplace_back("schedule", spec.schedule);
  t.header.emplace_back("rule", spec.rule);
  t.header.emplace_back("max-steps", std::to_string(spec.max_steps));
  t.header.emplace_back("initial", profile_name(game, trace.initial));
  t.columns = {"step", "player", "from", "to", "payoff_delta", "potential_delta"};
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const DynamicsStep<T>& step = trace.steps[k];
    t.rows.push_back({int_cell(static_cast<std::int64_t>(k + 1)),
                      text_cell(game.players[static_cast<std::size_t>(step.player)].name),
                      text_cell(strategy_name(game, step.from)), text_cell(strategy_name(game, step.to)),
                      value_cell(step.payoff_delta), value_cell(step.potential_delta)});
  }
  t.notes.emplace_back("terminal", profile_name(game, trace.terminal));
  t.notes.emplace_back("converged", trace.converged ? "true" : "false");
  t.notes.emplace_back("steps", std::to_string(trace.steps.size()));
  return emit(t, spec);
}

// ---------------------------------------------------------------------------
// pne: exhaustive equilibrium enumeration.

std::string join_profiles(const std::vector<StrategyProfile>& profiles, const std::string& sep,
                          const std::function<std::string(const StrategyProfile&)>& name) {
  std::string out;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    if (i > 0) out += sep;
    out += name(profiles[i]);
  }
  return out;
}

template <typename T>
int run_pne(const Game<T>& game, MediatorKind kind, const RunSpec& spec) {
  Table t = make_table("pne", spec);
  t.header.emplace_back("game", game_label(spec));
  t.header.emplace_back("mediator", mediator_name(kind));
  t.header.emplace_back("cap", std::to_string(spec.cap));
  t.columns = {"index", "profile", "welfare"};
  ProfileSpace space = ProfileSpace::of(game, spec.cap);
  std::vector<std::uint64_t> indices = enumerate_pne_indices(game, kind, space);
  for (std::uint64_t index : indices) {
    StrategyProfile profile = space.decode(index);
    t.rows.push_back({int_cell(static_cast<std::int64_t>(index)), text_cell(profile_name(game, profile)),
                      value_cell(social_welfare(game, kind, profile))});
  }
  t.notes.emplace_back("equilibria", std::to_string(indices.size()));
  if (indices.empty()) {
    t.notes.emplace_back("reason", "no-pne");
    std::vector<StrategyProfile> cycle = find_better_response_cycle(game, kind, spec.cap);
    t.notes.emplace_back("cycle", join_profiles(cycle, " -> ", [&](const StrategyProfile& p) {
                           return profile_name(game, p);
                         }));
    int code = emit(t, spec);
    return code != kOk ? code : kLimited;
  }
  return emit(t, spec);
}

// ---------------------------------------------------------------------------
// poa / upoa: optimum against the worst equilibrium.

template <typename T>
int emit_poa(const Game<T>& game, MediatorKind kind, const PoAResult<T>& result, const char* metric, Table t,
             const RunSpec& spec) {
  t.columns = {"game_id", "mediator", "metric", "optimum", "worst_eq", "ratio"};
  std::vector<Cell> row{text_cell(game_label(spec)), text_cell(mediator_name(kind)), text_cell(metric),
                        value_cell(result.optimum)};
  row.push_back(result.worst_equilibrium ? value_cell(*result.worst_equilibrium) : text_cell("-"));
  auto ratio = result.ratio();
  row.push_back(ratio ? value_cell(*ratio) : text_cell("inf"));
  t.rows.push_back(std::move(row));

  t.notes.emplace_back("optimum_witness", profile_name(game, result.optimum_witness));
  if (result.worst_witness) t.notes.emplace_back("worst_witness", profile_name(game, *result.worst_witness));
  if (!result.worst_equilibrium) {
    t.notes.emplace_back("reason", "no-pne");
    t.notes.emplace_back("cycle", join_profiles(result.no_pne_cycle, " -> ", [&](const StrategyProfile& p) {
                           return profile_name(game, p);
                         }));
    int code = emit(t, spec);
    return code != kOk ? code : kLimited;
  }
  return emit(t, spec);
}

template <typename T>
int run_poa(const Game<T>& game, MediatorKind kind, const RunSpec& spec) {
  Table t = make_table("poa", spec);
  t.header.emplace_back("game", game_label(spec));
  t.header.emplace_back("mediator", mediator_name(kind));
  t.header.emplace_back("cap", std::to_string(spec.cap));
  PoAResult<T> result = price_of_anarchy(game, kind, spec.cap);
  return emit_poa(game, kind, result, "welfare", std::move(t), spec);
}

template <typename T>
int run_upoa(const Game<T>& game, MediatorKind kind, const RunSpec& spec) {
  Rational plain = Rational::parse(spec.plain);
  if (plain < Rational(0) || plain > Rational(1))
    throw std::invalid_argument("--plain must lie in [0,1], got \"" + spec.plain + "\"");
  Table t = make_table("upoa", spec);
  t.header.emplace_back("game", game_label(spec));
  t.header.emplace_back("mediator", mediator_name(kind));
  t.header.emplace_back("plain", spec.plain);
  t.header.emplace_back("cap", std::to_string(spec.cap));
  UtilityConfig<T> config;
  if constexpr (numeric_traits<T>::exact)
    config.plain = plain;
  else
    config.plain = plain.to_double();
  PoAResult<T> result = user_price_of_anarchy(game, kind, config, spec.cap);
  return emit_poa(game, kind, result, "user-utility", std::move(t), spec);
}

// ---------------------------------------------------------------------------
// upoa-curve: the minimum single-user utility for every player count.

int run_curve(const RunSpec& spec) {
  Table t = make_table("upoa-curve", spec);
  t.header.emplace_back("n-max", std::to_string(spec.n_max));
  t.header.emplace_back("samples", std::to_string(spec.samples));
  t.columns = {"N", "U_star", "upoa_bound", "residual"};
  CurveOptions options;
  options.minimality_samples = spec.samples;
  options.seed = spec.seed;
  std::vector<CurvePoint> curve = min_utility_curve(spec.n_max, options);
  for (const CurvePoint& point : curve)
    t.rows.push_back({int_cell(point.n), fixed_cell(point.u_star, "%.6f"), fixed_cell(point.upoa_bound, "%.6f"),
                      fixed_cell(point.residual, "%.3e")});
  return emit(t, spec);
}

// ---------------------------------------------------------------------------
// generate: write a game file for any built-in generator.

int run_generate(const RunSpec& spec) {
  if (!spec.game_path.empty()) throw std::invalid_argument("generate takes --generator, not --game");
  if (spec.generator.empty()) throw std::invalid_argument("generate requires --generator");
  return write_text(serialize_game(load_game(spec)), spec.out);
}

// ---------------------------------------------------------------------------
// reproduce: the known-answer suite. Expected values are literals; observed
// values render straight from library calls, so any regression shows up as a
// string mismatch.

class ReproRows {
 public:
  explicit ReproRows(Table& t) : t_(t) {}

  void expect_equal(const std::string& check, const std::string& expected, const std::string& observed) {
    push(check, expected, observed, expected == observed);
  }
  void expect_true(const std::string& check, const std::string& expected, const std::string& observed, bool pass) {
    push(check, expected, observed, pass);
  }
  bool all_passed() const { return all_passed_; }

 private:
  void push(const std::string& check, const std::string& expected, const std::string& observed, bool pass) {
    if (!pass) all_passed_ = false;
    t_.rows.push_back({text_cell(check), text_cell(expected), text_cell(observed), text_cell(pass ? "pass" : "fail")});
  }
  Table& t_;
  bool all_passed_ = true;
};

std::string cell_of(const Rational& v) { return value_cell(v).csv; }

int run_reproduce(const RunSpec& spec) {
  Table t = make_table("reproduce", spec);
  t.columns = {"check", "expected", "observed", "status"};
  ReproRows rows(t);

  const Game<Rational> example = example_game();
  const StrategyProfile good{{{1}, {2}}};  // (l2,l3)
  const StrategyProfile weak{{{0}, {2}}};  // (l1,l3)

  for (UserIndex i = 0; i < 3; ++i) {
    static const char* expected[] = {"2/5 (0.4)", "7/20 (0.35)", "17/20 (0.85)"};
    DisplayDistribution<Rational> dist = display_distribution(example, MediatorKind::Shapley, good, i);
    rows.expect_equal("shapley display P(p1) for " + example.users[static_cast<std::size_t>(i)] + " at (l2,l3)",
                      expected[i], cell_of(dist.per_player[0]));
  }
  rows.expect_equal("shapley payoff p1 at (l2,l3)", "8/5 (1.6)",
                    cell_of(player_payoff(example, MediatorKind::Shapley, good, 0)));
  rows.expect_equal("shapley payoff p1 at (l1,l3)", "7/10 (0.7)",
                    cell_of(player_payoff(example, MediatorKind::Shapley, weak, 0)));
  rows.expect_equal("shapley equilibria of the example game", "(l2,l3)",
                    join_profiles(enumerate_pne(example, MediatorKind::Shapley), " ",
                                  [&](const StrategyProfile& p) { return profile_name(example, p); }));
  rows.expect_equal("shapley user utility at the equilibrium, plain 0", "429/200 (2.145)",
                    cell_of(user_utility(example, MediatorKind::Shapley, good, UtilityConfig<Rational>{Rational(0)})));
  rows.expect_equal(
      "potential delta equals payoff delta for p1: (l1,l3) -> (l2,l3)", "9/10 (0.9)",
      cell_of(potential_value(example, good) - potential_value(example, weak)));

  rows.expect_equal("top payoff p1 at (l1,l3)", "2 (2)",
                    cell_of(player_payoff(example, MediatorKind::Top, weak, 0)));
  rows.expect_equal("top user utility at (l1,l3)", "2 (2)",
                    cell_of(user_utility(example, MediatorKind::Top, weak, UtilityConfig<Rational>{Rational(0)})));
  rows.expect_equal("top user utility at (l2,l3)", "13/5 (2.6)",
                    cell_of(user_utility(example, MediatorKind::Top, good, UtilityConfig<Rational>{Rational(0)})));
  rows.expect_equal("top equilibria of the example game", "(l1,l3)",
                    join_profiles(enumerate_pne(example, MediatorKind::Top), " ",
                                  [&](const StrategyProfile& p) { return profile_name(example, p); }));

  const Game<Rational> cyclic = impossibility_game(Rational(9, 10), Rational(1, 2));
  rows.expect_equal("impossibility(9/10,1/2) equilibria under top", "empty",
                    enumerate_pne(cyclic, MediatorKind::Top).empty() ? "empty" : "non-empty");
  rows.expect_equal("impossibility(9/10,1/2) equilibria under btl", "empty",
                    enumerate_pne(cyclic, MediatorKind::Btl).empty() ? "empty" : "non-empty");
  rows.expect_equal("impossibility(9/10,1/2) equilibria under shapley", "non-empty",
                    enumerate_pne(cyclic, MediatorKind::Shapley).empty() ? "empty" : "non-empty");

  static const char* poa_expected[] = {"3/2 (1.5)", "5/3 (1.66666666667)", "7/4 (1.75)"};
  for (int n = 2; n <= 4; ++n) {
    PoAResult<Rational> poa = price_of_anarchy(tight_poa_game(n), MediatorKind::Shapley);
    rows.expect_equal("shapley price of anarchy on the shared-item game, n=" + std::to_string(n),
                      poa_expected[n - 2], poa.ratio() ? cell_of(*poa.ratio()) : "inf");
  }

  PoAResult<Rational> lone = user_price_of_anarchy(shapley_upoa_game(Rational(1, 100)), MediatorKind::Shapley,
                                                   UtilityConfig<Rational>{Rational(0)});
  rows.expect_equal("shapley user ratio on the lone eps item, eps=1/100", "100 (100)",
                    lone.ratio() ? cell_of(*lone.ratio()) : "inf");

  PoAResult<Rational> bland = user_price_of_anarchy(top_upoa_game(Rational(1, 100), Rational(1, 200)),
                                                    MediatorKind::Top, UtilityConfig<Rational>{Rational(0)});
  rows.expect_equal("top user ratio on the bland-item game, delta=1/100 eps=1/200", "201/4 (50.25)",
                    bland.ratio() ? cell_of(*bland.ratio()) : "inf");

  StationaryResult one = solve_stationary(1);
  rows.expect_equal("stationary point for one player", "0.5", decimal12(one.sigma[0]));
  rows.expect_equal("minimum single-user utility for one player", "0.75", decimal12(one.utility));

  CurveOptions curve_options;
  curve_options.seed = spec.seed;
  std::vector<CurvePoint> curve = min_utility_curve(200, curve_options);
  double floor = curve[0].u_star;
  for (const CurvePoint& point : curve) floor = std::min(floor, point.u_star);
  rows.expect_true("utility floor over player counts up to 200", "> 0.568", decimal12(floor), floor > 0.568);

  t.notes.emplace_back("result", rows.all_passed() ? "all-pass" : "mismatch");
  int code = emit(t, spec);
  if (code != kOk) return code;
  return rows.all_passed() ? kOk : kInvalid;
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{"Strategic recommendation games: mediators, dynamics, and anarchy bounds"};
  app.require_subcommand(1);
  RunSpec spec;

  auto add_output = [&](CLI::App* c) {
    c->add_option("--out", spec.out, "write the report to this file instead of stdout");
    c->add_option("--format", spec.format, "report format (default csv)")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_seed = [&](CLI::App* c) {
    c->add_option("--seed", spec.seed, "RNG seed (default 0), echoed in the report header");
  };
  auto add_game_source = [&](CLI::App* c) {
    c->add_option("--game", spec.game_path, "game file (JSON)");
    c->add_option("--generator", spec.generator,
                  "built-in game: example, impossibility, tight-poa, shapley-upoa, top-upoa, random");
    c->add_option("--x", spec.x, "impossibility: larger satisfaction value (default 9/10)");
    c->add_option("--y", spec.y, "impossibility: smaller satisfaction value (default 1/2)");
    c->add_option("--n", spec.n, "tight-poa: number of players (default 3)");
    c->add_option("--eps", spec.eps, "shapley-upoa / top-upoa: small satisfaction value (default 1/100)");
    c->add_option("--delta", spec.delta, "top-upoa: bland satisfaction value (default 1/10)");
    c->add_flag("--personalized", spec.personalized, "random: generate a personalized-offers game");
  };
  auto add_mediator = [&](CLI::App* c) {
    c->add_option("--mediator", spec.mediator, "top, btl, none, rand, or shapley")->required();
  };
  auto add_cap = [&](CLI::App* c) {
    c->add_option("--cap", spec.cap, "profile enumeration cap (default 10000000)");
  };

  CLI::App* mediate = app.add_subcommand("mediate", "display distribution of every user under one profile");
  add_game_source(mediate);
  add_mediator(mediate);
  mediate->add_option("--profile", spec.profile, "strategy profile, e.g. l2,l3 or l1+l3,l2")->required();
  add_seed(mediate);
  add_output(mediate);

  CLI::App* sample = app.add_subcommand("sample-check",
                                        "empirical Shapley sampler frequencies vs the closed form");
  add_game_source(sample);
  sample->add_option("--profile", spec.profile, "strategy profile")->required();
  sample->add_option("--draws", spec.draws, "draws per user (default 100000)");
  add_seed(sample);
  add_output(sample);

  CLI::App* axioms = app.add_subcommand("axioms", "fairness/efficiency/completeness verdicts for a mediator");
  add_game_source(axioms);
  add_mediator(axioms);
  axioms->add_option("--games", spec.games, "random games to sample when no --game/--generator (default 100)");
  axioms->add_option("--trials", spec.trials, "profile/user samples per game (default 8)");
  add_seed(axioms);
  add_output(axioms);

  CLI::App* dynamics = app.add_subcommand("dynamics", "better-response walk from an initial profile");
  add_game_source(dynamics);
  add_mediator(dynamics);
  dynamics->add_option("--profile", spec.profile, "initial profile (default: every player's first strategy)");
  dynamics->add_option("--schedule", spec.schedule, "deviator schedule (default round-robin)")
      ->check(CLI::IsMember({"round-robin", "random"}));
  dynamics->add_option("--rule", spec.rule, "deviation rule (default first)")
      ->check(CLI::IsMember({"first", "best"}));
  dynamics->add_option("--max-steps", spec.max_steps, "improvement step budget (default 10000)");
  add_seed(dynamics);
  add_output(dynamics);

  CLI::App* pne = app.add_subcommand("pne", "enumerate all pure Nash equilibria");
  add_game_source(pne);
  add_mediator(pne);
  add_cap(pne);
  add_seed(pne);
  add_output(pne);

  CLI::App* poa = app.add_subcommand("poa", "price of anarchy: optimal vs worst-equilibrium welfare");
  add_game_source(poa);
  add_mediator(poa);
  add_cap(poa);
  add_seed(poa);
  add_output(poa);

  CLI::App* upoa = app.add_subcommand("upoa", "user-side price of anarchy");
  add_game_source(upoa);
  add_mediator(upoa);
  upoa->add_option("--plain", spec.plain, "satisfaction of plain content, in [0,1] (default 0)");
  add_cap(upoa);
  add_seed(upoa);
  add_output(upoa);

  CLI::App* curve = app.add_subcommand("upoa-curve", "minimum single-user utility per player count");
  curve->add_option("--n-max", spec.n_max, "largest player count (default 1000)")->check(CLI::PositiveNumber);
  curve->add_option("--samples", spec.samples, "minimality samples per point (default 256)");
  add_seed(curve);
  add_output(curve);

  CLI::App* generate = app.add_subcommand("generate", "write a built-in game as a JSON game file");
  add_game_source(generate);
  add_seed(generate);
  generate->add_option("--out", spec.out, "write the game file here instead of stdout");

  CLI::App* reproduce = app.add_subcommand("reproduce", "known-answer suite over the built-in instances");
  add_seed(reproduce);
  add_output(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (mediate->parsed()) {
      AnyGame any = load_game(spec);
      MediatorKind kind = need_mediator(spec.mediator);
      return std::visit([&](const auto& g) { return run_mediate(g, kind, spec); }, any);
    }
    if (sample->parsed()) {
      AnyGame any = load_game(spec);
      return std::visit([&](const auto& g) { return run_sample_check(g, spec); }, any);
    }
    if (axioms->parsed()) return run_axioms(spec);
    if (dynamics->parsed()) {
      AnyGame any = load_game(spec);
      MediatorKind kind = need_mediator(spec.mediator);
      return std::visit([&](const auto& g) { return run_dynamics_cmd(g, kind, spec); }, any);
    }
    if (pne->parsed()) {
      AnyGame any = load_game(spec);
      MediatorKind kind = need_mediator(spec.mediator);
      return std::visit([&](const auto& g) { return run_pne(g, kind, spec); }, any);
    }
    if (poa->parsed()) {
      AnyGame any = load_game(spec);
      MediatorKind kind = need_mediator(spec.mediator);
      return std::visit([&](const auto& g) { return run_poa(g, kind, spec); }, any);
    }
    if (upoa->parsed()) {
      AnyGame any = load_game(spec);
      MediatorKind kind = need_mediator(spec.mediator);
      return std::visit([&](const auto& g) { return run_upoa(g, kind, spec); }, any);
    }
    if (curve->parsed()) return run_curve(spec);
    if (generate->parsed()) return run_generate(spec);
    if (reproduce->parsed()) return run_reproduce(spec);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimited;
  } catch (const StationaryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kLimited;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
