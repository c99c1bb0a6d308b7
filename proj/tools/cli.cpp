#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wythoff/beatty.hpp"
#include "wythoff/formulas.hpp"
#include "wythoff/grundy.hpp"
#include "wythoff/rulesets.hpp"
#include "wythoff/table_io.hpp"
#include "wythoff/verify.hpp"

namespace wythoff::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string cache_dir;

  std::string family = "wythoff";
  std::string k = "0";
  std::uint32_t k_prime = 0;
  std::uint32_t l = 0;
  std::optional<Pile> n;
  std::optional<NimValue> g;
  std::string format = "csv";
  std::string output;
  std::string formula;
  std::string theorem;
  std::string conjecture;
  Pile a = 0;
  Pile b = 0;
  std::uint64_t beatty_from = 0;
  std::uint64_t beatty_count = 20;
};

struct ParsedK {
  std::uint32_t value = 0;
  bool infinite = false;
};

ParsedK parse_k(const std::string& text) {
  if (text == "inf") return {0, true};
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw UsageError("--k expects a nonnegative integer or 'inf', got '" + text + "'");
  }
  return {v, false};
}

RulesetSpec ruleset_from(const Config& cfg) {
  const ParsedK k = parse_k(cfg.k);
  if (k.infinite) {
    if (cfg.family == "tk" || cfg.family == "tinf") return RulesetSpec::t_infinity();
    throw UsageError("--k inf is only meaningful for the T family");
  }
  return RulesetSpec::parse(cfg.family, k.value, cfg.l);
}

std::unique_ptr<TableStore> make_store(const Config& cfg) {
  if (cfg.cache_dir.empty()) return std::make_unique<TableStore>();
  return std::make_unique<TableStore>(std::filesystem::path(cfg.cache_dir));
}

// Writes to --output when given, else to `out`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void require_format(const Config& cfg) {
  if (cfg.format != "csv" && cfg.format != "json") {
    throw UsageError("--format must be csv or json");
  }
}

int emit_report(const Report& report, std::ostream& out) {
  out << serialize(report) << '\n';
  return report.status == Status::counterexample ? kCounterexample : kOk;
}

int cmd_beatty(const Config& cfg, std::ostream& out) {
  Sink sink(cfg.output, out);
  *sink << "n,A_n,B_n\n";
  for (std::uint64_t i = 0; i < cfg.beatty_count; ++i) {
    const std::uint64_t n = cfg.beatty_from + i;
    *sink << n << ',' << beatty::a_n(n) << ',' << beatty::b_n(n) << '\n';
  }
  return kOk;
}

int cmd_moves(const Config& cfg, std::ostream& out) {
  const RulesetSpec rs = ruleset_from(cfg);
  const Position p{cfg.a, cfg.b};
  std::vector<Position> seen;
  Sink sink(cfg.output, out);
  *sink << "kind,s,a,b\n";
  for (const Move& m : all_moves(rs, p)) {
    if (m.kind != MoveKind::diagonal) {
      // from (a,a) both piles give the same targets; list each once
      if (std::find(seen.begin(), seen.end(), m.target) != seen.end()) continue;
      seen.push_back(m.target);
    }
    *sink << to_string(m.kind) << ',' << m.amount << ',' << m.target.a() << ',' << m.target.b()
          << '\n';
  }
  return kOk;
}

int cmd_grundy(const Config& cfg, std::ostream& out) {
  require_format(cfg);
  const RulesetSpec rs = ruleset_from(cfg);
  auto store = make_store(cfg);
  const auto table = store->get(rs, cfg.n.value_or(20));
  Sink sink(cfg.output, out);
  if (cfg.format == "csv") {
    *sink << "a,b,g\n";
    table->for_each_lex([&](Position p, NimValue v) {
      if (!cfg.g || *cfg.g == v) *sink << p.a() << ',' << p.b() << ',' << v << '\n';
    });
  } else {
    nlohmann::json rows = nlohmann::json::array();
    table->for_each_lex([&](Position p, NimValue v) {
      if (!cfg.g || *cfg.g == v) rows.push_back({p.a(), p.b(), v});
    });
    *sink << rows.dump() << '\n';
  }
  return kOk;
}

int cmd_pvs(const Config& cfg, std::ostream& out) {
  require_format(cfg);
  if (cfg.formula.empty()) throw UsageError("pvs requires --formula");
  const auto id = formulas::parse_formula_id(cfg.formula);
  const ParsedK k = parse_k(cfg.k);
  if (k.infinite) throw UsageError("formula sets take a finite --k");
  const GSet set = formulas::enumerate(id, {k.value, cfg.l}, cfg.n.value_or(100));
  Sink sink(cfg.output, out);
  if (cfg.format == "csv") {
    *sink << "a,b\n";
    for (Position p : set.positions) *sink << p.a() << ',' << p.b() << '\n';
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (Position p : set.positions) rows.push_back({p.a(), p.b()});
    *sink << rows.dump() << '\n';
  }
  return kOk;
}

verify::Params params_from(const Config& cfg) {
  const ParsedK k = parse_k(cfg.k);
  return verify::Params{k.value, cfg.k_prime, cfg.l, k.infinite};
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  if (cfg.theorem.empty()) throw UsageError("verify requires --theorem");
  const auto id = verify::parse_theorem_id(cfg.theorem);
  auto store = make_store(cfg);
  return emit_report(
      verify::verify_theorem(*store, id, params_from(cfg), cfg.n.value_or(verify::kDefaultTheoremBound)),
      out);
}

int cmd_conjecture(const Config& cfg, std::ostream& out) {
  if (cfg.conjecture.empty()) throw UsageError("conjecture requires --id");
  const auto id = verify::parse_conjecture_id(cfg.conjecture);
  auto store = make_store(cfg);
  return emit_report(verify::explore_conjecture(*store, id, params_from(cfg),
                                                cfg.n.value_or(verify::kDefaultConjectureBound)),
                     out);
}

int cmd_closeness(const Config& cfg, std::ostream& out) {
  const ParsedK k = parse_k(cfg.k);
  if (k.infinite) throw UsageError("closeness takes a finite --k");
  auto store = make_store(cfg);
  const Pile n = cfg.n.value_or(verify::kDefaultConjectureBound);
  if (cfg.l % 2 == 1) return emit_report(verify::closeness_check(*store, k.value, cfg.l, n), out);
  return emit_report(verify::coincidence_check(*store, k.value, cfg.l, n), out);
}

int cmd_paper_values(const Config& cfg, std::ostream& out) {
  auto store = make_store(cfg);
  return emit_report(verify::check_paper_values(*store), out);
}

// Interactive game: the human moves first from the start position.
int cmd_play(const Config& cfg, std::istream& in, std::ostream& out) {
  const RulesetSpec rs = ruleset_from(cfg);
  Position pos{cfg.a, cfg.b};
  const auto table = grundy_table(rs, pos.b());

  out << rs.display() << " from " << pos << ": ";
  if (table[pos] == 0) {
    out << "P-position (nim-value 0); the player to move loses against optimal play\n";
  } else {
    out << "N-position (nim-value " << table[pos] << "); the player to move can win\n";
  }

  bool human_to_move = true;
  for (;;) {
    if (pos.terminal() || moves(rs, pos).empty()) {
      out << pos << ": no moves; previous player wins ("
          << (human_to_move ? "engine" : "you") << ")\n";
      return kOk;
    }
    if (human_to_move) {
      out << "your move from " << pos << ", enter target piles 'x y': " << std::flush;
      std::string line;
      if (!std::getline(in, line)) {
        out << "\nbye\n";
        return kOk;
      }
      std::istringstream ls(line);
      long long x = -1;
      long long y = -1;
      if (!(ls >> x >> y) || x < 0 || y < 0 || x > std::numeric_limits<Pile>::max() ||
          y > std::numeric_limits<Pile>::max()) {
        out << "enter two nonnegative pile sizes\n";
        continue;
      }
      const Position target{static_cast<Pile>(x), static_cast<Pile>(y)};
      if (auto reason = illegal_reason(rs, pos, target)) {
        out << "illegal move " << pos << " -> " << target << ": " << *reason << '\n';
        continue;
      }
      pos = target;
    } else {
      const NimValue here = table[pos];
      std::optional<Position> best;
      std::size_t best_replies = 0;
      for (Position q : moves(rs, pos)) {
        if (here > 0) {
          if (table[q] == 0) {
            best = q;
            break;
          }
          continue;
        }
        const std::size_t replies = moves(rs, q).size();
        if (!best || replies < best_replies) {
          best = q;
          best_replies = replies;
        }
      }
      if (!best || !is_legal(rs, pos, *best) || (here > 0) != (table[*best] == 0)) {
        throw std::logic_error("engine move selection violated the nim-value invariant");
      }
      out << "engine moves " << pos << " -> " << *best << '\n';
      pos = *best;
    }
    human_to_move = !human_to_move;
  }
}

void add_ruleset_flags(CLI::App* sub, Config& cfg) {
  sub->add_option("--family", cfg.family, "wythoff, wk, wkprime, wkl, tk or tinf")
      ->capture_default_str();
  sub->add_option("--k", cfg.k, "k parameter ('inf' selects T_inf)")->capture_default_str();
  sub->add_option("--l", cfg.l, "l parameter (W_{k,l})")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Wythoff's game variants: Grundy tables, closed forms and checks", "wythoff"};
  app.require_subcommand(1);
  app.add_option("--cache-dir", cfg.cache_dir, "directory for cached Grundy tables")
      ->envname("WYTHOFF_CACHE_DIR");

  auto* beatty = app.add_subcommand("beatty", "print n, A_n, B_n as CSV");
  beatty->add_option("--from", cfg.beatty_from, "first index")->capture_default_str();
  beatty->add_option("--count", cfg.beatty_count, "number of rows")->capture_default_str();
  beatty->add_option("--output", cfg.output, "write to file instead of stdout");

  auto* moves_cmd = app.add_subcommand("moves", "list the options of one position");
  add_ruleset_flags(moves_cmd, cfg);
  moves_cmd->add_option("--a", cfg.a, "first pile")->required();
  moves_cmd->add_option("--b", cfg.b, "second pile")->required();
  moves_cmd->add_option("--output", cfg.output, "write to file instead of stdout");

  auto* grundy = app.add_subcommand("grundy", "print the Grundy table (a,b,g rows)");
  add_ruleset_flags(grundy, cfg);
  grundy->add_option("--n", cfg.n, "bound on the larger pile (default 20)");
  grundy->add_option("--g", cfg.g, "only rows with this nim-value");
  grundy->add_option("--format", cfg.format, "csv or json")->capture_default_str();
  grundy->add_option("--output", cfg.output, "write to file instead of stdout");

  auto* pvs = app.add_subcommand("pvs", "print a closed-form position set");
  pvs->add_option("--formula", cfg.formula, "formula id, e.g. p_wk or s1_tk")->required();
  pvs->add_option("--k", cfg.k, "k parameter")->capture_default_str();
  pvs->add_option("--l", cfg.l, "l parameter")->capture_default_str();
  pvs->add_option("--n", cfg.n, "bound on the larger pile (default 100)");
  pvs->add_option("--format", cfg.format, "csv or json")->capture_default_str();
  pvs->add_option("--output", cfg.output, "write to file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "check a theorem against the engine");
  verify_cmd->add_option("--theorem", cfg.theorem, "thm2..thm9, cor1, cor2, cor3")->required();
  verify_cmd->add_option("--k", cfg.k, "k parameter ('inf' for T_inf)")->capture_default_str();
  verify_cmd->add_option("--l", cfg.l, "l parameter")->capture_default_str();
  verify_cmd->add_option("--n", cfg.n, "bound (default 200)");

  auto* conjecture = app.add_subcommand("conjecture", "search a conjecture for counterexamples");
  conjecture->add_option("--id", cfg.conjecture, "c1, c2a, c2b or c3")->required();
  conjecture->add_option("--k", cfg.k, "k parameter")->capture_default_str();
  conjecture->add_option("--kprime", cfg.k_prime, "k' parameter (c1)")->capture_default_str();
  conjecture->add_option("--l", cfg.l, "l parameter")->capture_default_str();
  conjecture->add_option("--n", cfg.n, "bound (default 100)");

  auto* closeness = app.add_subcommand(
      "closeness", "compare nim-value-1 sets of W_{k,l} and W_l (index-wise for odd l)");
  closeness->add_option("--k", cfg.k, "k parameter")->capture_default_str();
  closeness->add_option("--l", cfg.l, "l parameter")->required();
  closeness->add_option("--n", cfg.n, "bound (default 100)");

  auto* paper_values = app.add_subcommand("paper-values", "reproduce g(20,30) in W_1, T_1, T_38");

  auto* play = app.add_subcommand("play", "play against the engine in the terminal");
  add_ruleset_flags(play, cfg);
  play->add_option("--a", cfg.a, "first pile")->required();
  play->add_option("--b", cfg.b, "second pile")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (beatty->parsed()) return cmd_beatty(cfg, out);
    if (moves_cmd->parsed()) return cmd_moves(cfg, out);
    if (grundy->parsed()) return cmd_grundy(cfg, out);
    if (pvs->parsed()) return cmd_pvs(cfg, out);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out);
    if (conjecture->parsed()) return cmd_conjecture(cfg, out);
    if (closeness->parsed()) return cmd_closeness(cfg, out);
    if (paper_values->parsed()) return cmd_paper_values(cfg, out);
    if (play->parsed()) return cmd_play(cfg, in, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace wythoff::cli
