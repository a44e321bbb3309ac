#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "christol/christol.hpp"

namespace christol::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

struct SpecOptions {
  unsigned p = 0;
  std::string poly;
  std::string seed;
  std::string example;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--p", p, "prime modulus");
    cmd.add_option("--poly", poly, "Q(x,y), e.g. \"(1+x)^3*y^2+(1+x)^2*y+x\"");
    cmd.add_option("--seed", seed, "prescribed leading coefficients, comma-separated");
    cmd.add_option("--example", example, "use a shipped series by name instead of --p/--poly/--seed");
  }

  BranchSpec resolve() const {
    if (!example.empty()) {
      if (!poly.empty()) throw UsageError("--example and --poly are mutually exclusive");
      try {
        return catalog_entry(example).spec();
      } catch (const std::out_of_range&) {
        throw UsageError("unknown example '" + example + "'");
      }
    }
    if (p == 0 || poly.empty()) throw UsageError("--p and --poly are required");
    const Prime prime(p);
    return {parse_bivariate(poly, prime), parse_residues(seed, prime)};
  }
};

// Oracles used by `selftest`; they work from the digits of n only.
Residue digit_parity(std::uint64_t n) { return static_cast<Residue>(__builtin_popcountll(n) & 1); }

Residue central_binomial_mod3(std::uint64_t n) {
  Residue r = 1;
  for (; n > 0; n /= 3) {
    if (n % 3 == 2) return 0;
    if (n % 3 == 1) r = (r * 2) % 3;
  }
  return r;
}

bool selftest_one(std::ostream& out, const std::string& name, Residue (*oracle)(std::uint64_t),
                  std::uint64_t count, std::size_t expected_states) {
  const auto spec = catalog_entry(name).spec();
  const auto rep = orbit_closure(spec);
  const auto orbit = minimize(build_dfao(spec));
  const auto linear = minimize(dfao_from_linear(rep));
  bool ok = orbit == linear && orbit.size() == expected_states && recheck(rep, spec, 2);
  const auto series = expand_branch(spec, count);
  for (std::uint64_t n = 0; n < count && ok; ++n) {
    const auto digits = to_digits_lsd(n, spec.prime());
    const Residue want = oracle(n);
    ok = series[n] == want && run(orbit, digits).value() == want && run(rep, digits).value() == want;
  }
  out << "selftest " << name << ": " << (ok ? "ok" : "FAILED") << " (" << orbit.size()
      << " states, " << count << " coefficients)\n";
  return ok;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automata for algebraic power series over F_p", "christol"};
  app.require_subcommand(1);

  // expand
  auto* expand = app.add_subcommand("expand", "expand an algebraic branch to N coefficients");
  SpecOptions expand_spec;
  expand_spec.add_to(*expand);
  std::size_t terms = 0;
  std::string method = "auto";
  expand->add_option("--terms", terms, "number of coefficients")->required();
  expand->add_option("--method", method, "auto | baseline | newton")
      ->check(CLI::IsMember({"auto", "baseline", "newton"}));

  // weed
  auto* weed_cmd = app.add_subcommand("weed", "weeding of degree k of a coefficient list");
  unsigned weed_p = 0;
  std::string weed_series;
  unsigned degree = 0;
  bool via_derivative = false;
  weed_cmd->add_option("--p", weed_p, "prime modulus")->required();
  weed_cmd->add_option("--series", weed_series, "comma-separated coefficients")->required();
  weed_cmd->add_option("--degree", degree, "weeding degree k < p")->required();
  weed_cmd->add_flag("--via-derivative", via_derivative, "use the x^k / derivative / root route");

  // automaton
  auto* automaton = app.add_subcommand("automaton", "build the coefficient automaton");
  SpecOptions automaton_spec;
  automaton_spec.add_to(*automaton);
  bool do_minimize = false;
  bool linear = false;
  std::string out_path;
  std::string dot_path;
  ClosureConfig cfg;
  automaton->add_flag("--minimize", do_minimize, "minimize the automaton");
  automaton->add_flag("--linear", linear, "build from the linear (coordinate-vector) representation");
  automaton->add_option("--out", out_path, "dfao-v1 JSON output file (stdout if omitted)");
  automaton->add_option("--dot", dot_path, "also write Graphviz DOT here");
  automaton->add_option("--n-eq", cfg.n_eq, "comparison precision")->capture_default_str();
  automaton->add_option("--max-states", cfg.max_states, "state cap")->capture_default_str();

  // query
  auto* query_cmd = app.add_subcommand("query", "evaluate a saved automaton at n");
  std::string automaton_path;
  std::string n_text;
  query_cmd->add_option("--automaton", automaton_path, "dfao-v1 JSON file")->required();
  query_cmd->add_option("--n", n_text, "non-negative decimal integer")->required();

  // algebraize
  auto* algebraize = app.add_subcommand("algebraize", "search for Q(x,y) annihilating a series");
  unsigned alg_p = 0;
  std::string series_file;
  unsigned dx = 0;
  unsigned dy = 0;
  algebraize->add_option("--p", alg_p, "prime modulus")->required();
  algebraize->add_option("--series-file", series_file, "file of comma-separated coefficients")->required();
  algebraize->add_option("--dx", dx, "degree bound in x")->required();
  algebraize->add_option("--dy", dy, "degree bound in y")->required();

  auto* selftest = app.add_subcommand("selftest", "check shipped examples against closed-form oracles");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (expand->parsed()) {
      const auto spec = expand_spec.resolve();
      const auto m = method == "baseline" ? ExpansionMethod::kBaseline
                     : method == "newton" ? ExpansionMethod::kNewton
                                          : ExpansionMethod::kAuto;
      out << format_series(expand_branch(spec, terms, m)) << "\n";
    } else if (weed_cmd->parsed()) {
      const Prime p(weed_p);
      const auto f = parse_series(weed_series, p);
      out << format_series(via_derivative ? weed_via_derivative(f, degree) : weed(f, degree)) << "\n";
    } else if (automaton->parsed()) {
      const auto spec = automaton_spec.resolve();
      Dfao a = linear ? dfao_from_linear(orbit_closure(spec, cfg), cfg.max_states) : build_dfao(spec, cfg);
      if (do_minimize) a = minimize(a);
      const auto json = serialize(a);
      if (out_path.empty()) {
        out << json << "\n";
      } else {
        write_file(out_path, json + "\n");
      }
      if (!dot_path.empty()) write_file(dot_path, export_dot(a));
    } else if (query_cmd->parsed()) {
      if (n_text.empty() || !std::all_of(n_text.begin(), n_text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw UsageError("--n must be a non-negative decimal integer, got '" + n_text + "'");
      }
      const auto a = deserialize(read_file(automaton_path));
      out << query(a, n_text).value() << "\n";
    } else if (algebraize->parsed()) {
      const Prime p(alg_p);
      const auto f = parse_series(read_file(series_file), p);
      out << guess_polynomial(f, dx, dy).to_string() << "\n";
    } else if (selftest->parsed()) {
      bool ok = selftest_one(out, "thue-morse", digit_parity, 1u << 12, 2);
      ok = selftest_one(out, "central-binomial-3", central_binomial_mod3, 6561, 3) && ok;
      return ok ? kExitOk : kExitError;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitOk;
}

}  // namespace christol::cli
