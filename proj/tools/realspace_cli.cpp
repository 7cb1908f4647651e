#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "realspace/advdfa.hpp"
#include "realspace/builtins.hpp"
#include "realspace/errors.hpp"
#include "realspace/profiler.hpp"
#include "realspace/ratarith.hpp"
#include "realspace/tally.hpp"

namespace {

using namespace realspace;

std::uint64_t parse_u64(const std::string& s) {
  try {
    std::size_t pos = 0;
    std::uint64_t v = std::stoull(s, &pos);
    if (pos != s.size()) throw Error("not a number: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw Error("not a number: " + s);
  }
}

/// First one or two tokens name a number: a built-in, "rational P/Q", or
/// "file:PATH".
std::unique_ptr<DigitGenerator> resolve_selector(const std::vector<std::string>& args,
                                                 std::size_t& consumed, int base) {
  if (args.empty()) throw Error("missing number selector");
  const std::string& head = args[0];
  if (head == "rational") {
    if (args.size() < 2) throw Error("selector 'rational' needs a P/Q argument");
    consumed = 2;
    return make_rational_gen(parse_rational(args[1]), base ? base : 2);
  }
  consumed = 1;
  if (head.rfind("file:", 0) == 0) return load_generator_file(head.substr(5), base);
  return make_builtin(head, base);
}

std::vector<std::string> rest_of(const std::vector<std::string>& args, std::size_t used) {
  return {args.begin() + static_cast<std::ptrdiff_t>(used), args.end()};
}

std::uint64_t triple_to_len(std::uint64_t n, std::uint64_t i, std::uint64_t b) {
  if (b > 1 || i < 1 || i > n)
    throw InvalidTriple("need 1 <= i <= n and b in {0,1}");
  return pair3(n, i, static_cast<int>(b));
}

void write_transcript(const OracleHandle& oracle, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    oracle.write_transcript_csv(std::cout);
  } else {
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    oracle.write_transcript_csv(f);
  }
}

std::vector<std::size_t> parse_grid(const std::string& text) {
  std::vector<std::size_t> grid;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    grid.push_back(parse_u64(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return grid;
}

const char* kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::HaltsFinite: return "halts";
    case WitnessKind::EventuallyPeriodicInfinite: return "periodic";
    case WitnessKind::SilentLoop: return "silent-loop";
  }
  return "?";
}

int run_selftest(std::uint64_t seed);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"digit streams of computable reals, with charged work-space metering"};
  app.require_subcommand(1);
  int rc = 0;

  auto* digits = app.add_subcommand("digits", "print an n-digit evaluation");
  std::vector<std::string> d_args;
  int d_n = 8, d_base = 0;
  bool d_meter = false, d_fake = false;
  std::string d_format = "text", d_trace;
  digits->add_option("number", d_args, "selector (built-in name, 'rational P/Q', file:PATH)")
      ->expected(-1);
  digits->add_option("-n,--digits", d_n, "fractional digits to produce");
  digits->add_option("--base", d_base, "digit base override");
  digits->add_flag("--meter", d_meter, "also print the peak cell count");
  digits->add_flag("--fake-input", d_fake, "run through the binary position-counter adapter");
  digits->add_option("--trace", d_trace, "write the per-step meter trace CSV to a file");
  digits->add_option("--format", d_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  digits->callback([&] {
    if (d_n < 0) throw Error("digit count must be nonnegative");
    std::size_t used = 0;
    auto g = resolve_selector(d_args, used, d_base);
    if (used != d_args.size()) throw Error("unexpected arguments after selector");
    SpaceMeter meter;
    if (!d_trace.empty()) meter.enable_trace();
    Dyadic v = d_fake ? g->eval_fake_input(static_cast<std::size_t>(d_n), meter)
                      : g->eval(static_cast<std::size_t>(d_n), meter);
    if (!d_trace.empty()) {
      std::ofstream f(d_trace);
      if (!f) throw Error("cannot write " + d_trace);
      meter.write_trace_csv(f);
    }
    if (d_format == "json") {
      nlohmann::json out{{"number", g->label()},
                         {"value", v.str()},
                         {"digits", d_n},
                         {"peak_cells", meter.peak_cells()}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << v.str() << "\n";
      if (d_meter) std::cout << "peak_cells: " << meter.peak_cells() << "\n";
    }
  });

  auto* profile = app.add_subcommand("profile", "measure peak cells across a grid and classify");
  std::vector<std::string> p_args;
  int p_base = 0;
  bool p_compact = false, p_fake = false;
  std::string p_grid, p_format = "text";
  profile->add_option("number", p_args, "selector")->expected(-1);
  profile->add_option("--base", p_base, "digit base override");
  profile->add_option("--grid", p_grid, "comma-separated n values");
  profile->add_flag("--compact", p_compact, "use the short grid (64..1024)");
  profile->add_flag("--fake-input", p_fake, "profile through the position-counter adapter");
  profile->add_option("--format", p_format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  profile->callback([&] {
    std::size_t used = 0;
    auto g = resolve_selector(p_args, used, p_base);
    if (used != p_args.size()) throw Error("unexpected arguments after selector");
    std::vector<std::size_t> grid =
        !p_grid.empty() ? parse_grid(p_grid) : p_compact ? compact_grid() : default_grid();
    auto samples = sample(
        [&](std::size_t n, SpaceMeter& meter) {
          if (p_fake)
            g->eval_fake_input(n, meter);
          else
            g->eval(n, meter);
        },
        grid);
    GrowthVerdict v = classify(samples);
    if (p_format == "csv") {
      write_samples_csv(std::cout, samples);
      std::cout << "# best_class=" << growth_class_name(v.best_class)
                << " fit_constant=" << v.fit_constant << " residual=" << v.residual
                << " margin=" << v.margin << "\n";
    } else if (p_format == "json") {
      nlohmann::json out;
      out["number"] = g->label();
      for (const auto& s : samples)
        out["samples"].push_back({{"n", s.n}, {"peak_cells", s.peak_cells}});
      out["verdict"] = {{"best_class", growth_class_name(v.best_class)},
                        {"fit_constant", v.fit_constant},
                        {"residual", v.residual},
                        {"margin", v.margin}};
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& s : samples)
        std::cout << "n=" << s.n << " peak_cells=" << s.peak_cells << "\n";
      std::cout << "best_class: " << growth_class_name(v.best_class) << "\n"
                << "fit_constant: " << v.fit_constant << "\n"
                << "residual: " << v.residual << "\n"
                << "margin: " << v.margin << "\n";
    }
  });

  auto* tally = app.add_subcommand("tally", "tally-set membership and reconstruction");
  std::vector<std::string> t_args;
  int t_base = 0;
  bool t_meter = false;
  std::uint64_t t_len = 0;
  int t_reconstruct = -1;
  std::string t_mode = "fast";
  bool t_len_given = false;
  tally->add_option("query", t_args, "selector, then optionally a triple n i b")->expected(-1);
  tally->add_option("--base", t_base, "digit base override");
  tally->add_option("--len", t_len, "query by encoded length instead of a triple")
      ->each([&](const std::string&) { t_len_given = true; });
  tally->add_option("--reconstruct", t_reconstruct, "rebuild the first N digits through queries");
  tally->add_option("--mode", t_mode, "faithful or fast scan for --reconstruct")
      ->check(CLI::IsMember({"faithful", "fast"}));
  tally->add_flag("--meter", t_meter, "also print the peak cell count");
  tally->callback([&] {
    std::size_t used = 0;
    auto g = resolve_selector(t_args, used, t_base);
    auto rest = rest_of(t_args, used);
    SpaceMeter meter;
    if (t_reconstruct >= 0) {
      if (!rest.empty()) throw Error("--reconstruct takes no triple");
      TallyOracle oracle = tally_oracle(*g);
      Dyadic v = digits_from_tally(oracle, static_cast<std::size_t>(t_reconstruct), meter,
                                   t_mode == "faithful" ? TallyScanMode::Faithful
                                                        : TallyScanMode::Fast);
      std::cout << v.str() << "\n"
                << "queries: " << oracle.query_count() << "\n";
    } else {
      std::uint64_t len = 0;
      if (t_len_given) {
        if (!rest.empty()) throw Error("give either a triple or --len, not both");
        len = t_len;
      } else if (rest.size() == 3) {
        len = triple_to_len(parse_u64(rest[0]), parse_u64(rest[1]), parse_u64(rest[2]));
      } else {
        throw Error("need a triple n i b or --len");
      }
      std::cout << (tally_member(len, *g, meter) ? "member" : "non-member") << "\n";
    }
    if (t_meter) std::cout << "peak_cells: " << meter.peak_cells() << "\n";
  });

  auto* leftcut = app.add_subcommand("leftcut", "left-cut membership for a dyadic numeral");
  std::vector<std::string> l_args;
  int l_base = 0;
  bool l_meter = false;
  leftcut->add_option("query", l_args, "selector, then a base-2 numeral like 0.0110")
      ->expected(-1);
  leftcut->add_option("--base", l_base, "digit base override");
  leftcut->add_flag("--meter", l_meter, "also print the peak cell count");
  leftcut->callback([&] {
    std::size_t used = 0;
    auto g = resolve_selector(l_args, used, l_base);
    auto rest = rest_of(l_args, used);
    if (rest.size() != 1) throw Error("need exactly one numeral");
    Dyadic d = Dyadic::parse(rest[0], 2);
    SpaceMeter meter;
    std::cout << (leftcut_member(d, *g, meter) ? "member" : "non-member") << "\n";
    if (l_meter) std::cout << "peak_cells: " << meter.peak_cells() << "\n";
  });

  auto* reduce = app.add_subcommand("reduce", "run one language through an oracle for the other");
  std::vector<std::string> r_args;
  int r_base = 0;
  std::string r_transcript, r_search = "greedy";
  std::uint64_t r_len = 0;
  bool r_len_given = false;
  reduce->add_option("what", r_args, "L2T|T2L, selector, then the instance")->expected(-1);
  reduce->add_option("--base", r_base, "digit base override");
  reduce->add_option("--len", r_len, "T2L instance by encoded length")
      ->each([&](const std::string&) { r_len_given = true; });
  reduce->add_option("--search", r_search, "greedy or exhaustive (T2L only)")
      ->check(CLI::IsMember({"greedy", "exhaustive"}));
  reduce->add_option("--transcript", r_transcript, "write the query transcript CSV ('-' = stdout)");
  reduce->callback([&] {
    if (r_args.empty()) throw Error("need a direction, L2T or T2L");
    std::string direction = r_args[0];
    std::size_t used = 0;
    auto g = resolve_selector(rest_of(r_args, 1), used, r_base);
    auto rest = rest_of(r_args, 1 + used);
    SpaceMeter meter;
    if (direction == "L2T") {
      if (rest.size() != 1) throw Error("L2T needs one numeral");
      Dyadic d = Dyadic::parse(rest[0], 2);
      TallyOracle oracle = tally_oracle(*g);
      if (!r_transcript.empty()) oracle.enable_transcript();
      bool mem = leftcut_via_tally(d, oracle, meter);
      std::cout << (mem ? "member" : "non-member") << "\n"
                << "queries: " << oracle.query_count() << "\n";
      write_transcript(oracle, r_transcript);
    } else if (direction == "T2L") {
      std::uint64_t len = 0;
      if (r_len_given) {
        if (!rest.empty()) throw Error("give either a triple or --len, not both");
        len = r_len;
      } else if (rest.size() == 3) {
        len = triple_to_len(parse_u64(rest[0]), parse_u64(rest[1]), parse_u64(rest[2]));
      } else {
        throw Error("T2L needs a triple n i b or --len");
      }
      LeftcutOracle oracle = leftcut_oracle(*g);
      if (!r_transcript.empty()) oracle.enable_transcript();
      bool mem = tally_via_leftcut(len, oracle, meter,
                                   r_search == "greedy" ? CutSearchMode::Greedy
                                                        : CutSearchMode::Exhaustive);
      std::cout << (mem ? "member" : "non-member") << "\n"
                << "queries: " << oracle.query_count() << "\n";
      write_transcript(oracle, r_transcript);
    } else {
      throw Error("direction must be L2T or T2L");
    }
  });

  auto* dfa = app.add_subcommand("dfa", "simulate an endmarked two-tape automaton with advice");
  std::string f_path;
  std::uint64_t f_n = 4;
  std::size_t f_limit = 64;
  std::vector<std::string> f_check;
  std::size_t f_nmax = 8;
  std::string f_format = "text";
  dfa->add_option("machine", f_path, "machine JSON path")->required();
  dfa->add_option("-n,--input-length", f_n, "unary input length");
  dfa->add_option("--limit", f_limit, "maximum emitted symbols for the raw run");
  dfa->add_option("--check", f_check, "compare against this number selector")->expected(-1);
  dfa->add_option("--nmax", f_nmax, "largest n for --check");
  dfa->add_option("--format", f_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  dfa->callback([&] {
    std::ifstream in(f_path);
    if (!in) throw SpecLoadError("cannot open " + f_path);
    AdvicedDFA machine = load_adviced_dfa(in);
    RunResult r = run(machine, f_n, f_limit);
    PeriodicityWitness w = detect_cycle(machine, f_n);
    bool periodic = w.kind == WitnessKind::EventuallyPeriodicInfinite;
    Rational limit;
    if (periodic) limit = rational_limit(w, 2);
    nlohmann::json out{{"output", r.output},
                       {"halted", r.halted},
                       {"steps", r.steps},
                       {"witness",
                        {{"kind", kind_name(w.kind)}, {"w1", w.w1}, {"w2", w.w2}}}};
    if (periodic) out["limit"] = to_string(limit);
    if (!f_check.empty()) {
      std::size_t used = 0;
      auto g = resolve_selector(f_check, used, 0);
      if (used != f_check.size()) throw Error("unexpected arguments after --check selector");
      CheckReport report = check_computes(machine, *g, f_nmax);
      for (const auto& e : report.entries)
        out["check"].push_back({{"n", e.n}, {"pass", e.pass}, {"value", to_string(e.value)}});
      out["check_all_pass"] = report.all_pass;
      if (!report.all_pass) out["check_first_failure"] = report.first_failure;
    }
    if (f_format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "output: " << r.output << "\n"
                << "halted: " << (r.halted ? "yes" : "no") << "\n"
                << "steps: " << r.steps << "\n"
                << "witness: " << kind_name(w.kind) << " w1='" << w.w1 << "' w2='" << w.w2
                << "'\n";
      if (periodic) std::cout << "limit: " << to_string(limit) << "\n";
      if (out.contains("check")) {
        for (const auto& e : out["check"])
          std::cout << "n=" << e["n"] << " " << (e["pass"].get<bool>() ? "pass" : "FAIL")
                    << " value=" << e["value"].get<std::string>() << "\n";
        std::cout << (out["check_all_pass"].get<bool>() ? "check: all pass" : "check: failed")
                  << "\n";
      }
    }
  });

  auto* pair_cmd = app.add_subcommand("pair", "encode or decode with the diagonal pairing");
  std::vector<std::string> g_args;
  bool g_triple = false;
  pair_cmd->add_option("what", g_args, "encode i j | encode n i b | decode h")->expected(-1);
  pair_cmd->add_flag("--triple", g_triple, "decode as a nested triple");
  pair_cmd->callback([&] {
    if (g_args.empty()) throw Error("need encode or decode");
    if (g_args[0] == "encode" && g_args.size() == 3) {
      std::cout << pair(parse_u64(g_args[1]), parse_u64(g_args[2])) << "\n";
    } else if (g_args[0] == "encode" && g_args.size() == 4) {
      std::cout << triple_to_len(parse_u64(g_args[1]), parse_u64(g_args[2]),
                                 parse_u64(g_args[3]))
                << "\n";
    } else if (g_args[0] == "decode" && g_args.size() == 2) {
      std::uint64_t h = parse_u64(g_args[1]);
      if (g_triple) {
        TallyTriple t = unpair3(h);
        std::cout << "(" << t.n << "," << t.i << "," << t.b << ")\n";
      } else {
        std::uint64_t i = 0, j = 0;
        unpair(h, i, j);
        std::cout << "(" << i << "," << j << ")\n";
      }
    } else {
      throw Error("usage: pair encode i j | pair encode n i b | pair decode h [--triple]");
    }
  });

  auto* selftest = app.add_subcommand("selftest", "quick internal cross-checks");
  selftest->callback([&] {
    const char* env = std::getenv("REALSPACE_SEED");
    std::uint64_t seed = env ? parse_u64(env) : 20260823ull;
    rc = run_selftest(seed);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const SpecLoadError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SeedInvalid& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const BaseMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedNumeral& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidTriple& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DivisionByZero& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AdviceMissing& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientSamples& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

namespace {

int run_selftest(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::cout << (ok ? "ok - " : "FAIL - ") << name << "\n";
    if (!ok) ++failures;
  };
  std::vector<std::function<void()>> checks;

  checks.emplace_back([&] {
    SpaceMeter m;
    check("frozen digit prefixes",
          make_builtin("sqrt2")->eval(8, m).str() == "1.01101010" &&
              make_builtin("liouville")->eval(8, m).str() == "0.11000100" &&
              make_rational_gen(make_rational(22, 7), 10)->eval(3, m).str() == "3.142");
  });
  checks.emplace_back([&] {
    bool ok = true;
    for (int t = 0; t < 2000 && ok; ++t) {
      std::uint64_t i = rng() % (1u << 20), j = rng() % (1u << 20);
      std::uint64_t a = 0, b = 0;
      unpair(pair(i, j), a, b);
      ok = a == i && b == j;
    }
    check("pairing round trip", ok);
  });
  checks.emplace_back([&] {
    bool ok = true;
    for (int t = 0; t < 500 && ok; ++t) {
      std::uint64_t v = rng() % (1ull << 40);
      std::uint64_t r = isqrt_fast(v);
      ok = r * r <= v && (r + 1) * (r + 1) > v && r == isqrt_incremental(v % 100000);
      if (!ok) ok = r * r <= v && (r + 1) * (r + 1) > v;  // incremental checked on small v only
    }
    check("integer square root", ok);
  });
  checks.emplace_back([&] {
    auto g = make_builtin("golden");
    TallyOracle oracle = tally_oracle(*g);
    SpaceMeter m1, m2;
    check("tally round trip",
          digits_from_tally(oracle, 8, m1).frac_digits() == g->eval(8, m2).frac_digits());
  });
  checks.emplace_back([&] {
    auto g = make_builtin("sqrt2");
    TallyOracle oracle = tally_oracle(*g);
    bool ok = true;
    for (int t = 0; t < 50 && ok; ++t) {
      std::vector<std::uint8_t> frac;
      for (int i = 0; i < 6; ++i) frac.push_back(rng() % 2);
      Dyadic d = Dyadic::from_digits(2, false, {0}, std::move(frac));
      SpaceMeter m1, m2;
      ok = leftcut_via_tally(d, oracle, m1) == leftcut_member(d, *g, m2);
    }
    check("left cut via tally", ok);
  });
  checks.emplace_back([&] {
    auto w = detect_cycle(make_digit_cycler("01"), 4);
    check("cycler limit is 1/3", to_string(rational_limit(w, 2)) == "1/3");
  });
  checks.emplace_back([&] {
    bool ok = true;
    for (int t = 0; t < 200 && ok; ++t) {
      std::uint64_t p = 1 + rng() % 5000, q = 1 + rng() % 5000;
      Rational r = rat_lowest_terms(make_rational(static_cast<std::int64_t>(p),
                                                  static_cast<std::int64_t>(q)));
      std::uint64_t g = std::gcd(p, q);
      ok = r.num.to_u64() == p / g && r.den.to_u64() == q / g;
    }
    check("lowest terms vs gcd", ok);
  });

  std::shuffle(checks.begin(), checks.end(), rng);
  std::cout << "seed: " << seed << "\n";
  for (auto& fn : checks) fn();
  std::cout << (failures == 0 ? "selftest: all ok" : "selftest: FAILURES") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace
