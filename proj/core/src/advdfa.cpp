#include "realspace/advdfa.hpp"

#include <algorithm>
#include <istream>
#include <utility>

#include "json.hpp"
#include "realspace/errors.hpp"

namespace realspace {

namespace {

int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  return -1;
}

char digit_char(int v) {
  return static_cast<char>(v < 10 ? '0' + v : 'a' + (v - 10));
}

}  // namespace

int AdvicedDFA::symbol_index(char c) const {
  if (c == '^') return 0;
  if (c == '$') return 1;
  for (std::size_t i = 0; i < alphabet.size(); ++i)
    if (alphabet[i] == c) return static_cast<int>(2 + i);
  throw SpecLoadError(std::string("symbol '") + c + "' is not in the alphabet");
}

void AdvicedDFA::allocate_delta() {
  delta.assign(state_count(),
               std::vector<std::vector<DfaStep>>(symbol_count(),
                                                 std::vector<DfaStep>(symbol_count())));
}

void AdvicedDFA::validate() const {
  if (state_names.empty()) throw SpecLoadError("machine needs at least one state");
  if (start < 0 || static_cast<std::size_t>(start) >= state_count())
    throw SpecLoadError("start state out of range");
  if (halting.size() != state_count()) throw SpecLoadError("halting flags do not match states");
  if (alphabet.empty()) throw SpecLoadError("alphabet must be nonempty");
  if (std::find(alphabet.begin(), alphabet.end(), '0') == alphabet.end())
    throw SpecLoadError("alphabet must contain '0', the unary input symbol");
  for (char c : alphabet) {
    if (digit_value(c) < 0) throw SpecLoadError(std::string("alphabet symbol '") + c + "' is not a digit");
    if (std::count(alphabet.begin(), alphabet.end(), c) != 1)
      throw SpecLoadError("alphabet symbols must be distinct");
  }
  if (delta.size() != state_count()) throw SpecLoadError("transition table does not match states");
  for (const auto& by_input : delta) {
    if (by_input.size() != symbol_count()) throw SpecLoadError("transition table shape is wrong");
    for (const auto& by_advice : by_input) {
      if (by_advice.size() != symbol_count()) throw SpecLoadError("transition table shape is wrong");
      for (const DfaStep& s : by_advice) {
        if (s.next < 0 || static_cast<std::size_t>(s.next) >= state_count())
          throw SpecLoadError("transition targets a state out of range");
        if ((s.move_input != -1 && s.move_input != 1) || (s.move_advice != -1 && s.move_advice != 1))
          throw SpecLoadError("head moves must be strict left or right");
        if (s.out < -1 || s.out >= 36) throw SpecLoadError("output symbol out of range");
      }
    }
  }
  auto check_advice = [this](const std::string& a) {
    if (a.size() > max_advice_length)
      throw SpecLoadError("advice word longer than the declared bound");
    for (char c : a)
      if (std::find(alphabet.begin(), alphabet.end(), c) == alphabet.end())
        throw SpecLoadError("advice uses a symbol outside the alphabet");
  };
  if (has_default_advice) check_advice(default_advice);
  for (const auto& [n, a] : advice) {
    (void)n;
    check_advice(a);
  }
}

const std::string& AdvicedDFA::advice_for(std::uint64_t n) const {
  auto it = advice.find(n);
  if (it != advice.end()) return it->second;
  if (has_default_advice) return default_advice;
  throw AdviceMissing("no advice for input length " + std::to_string(n));
}

AdvicedDFA load_adviced_dfa(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SpecLoadError(std::string("machine JSON: ") + e.what());
  }
  try {
    AdvicedDFA m;
    if (doc.contains("alphabet"))
      for (const auto& s : doc.at("alphabet")) {
        std::string sym = s.get<std::string>();
        if (sym.size() != 1) throw SpecLoadError("alphabet entries must be single characters");
        m.alphabet.push_back(sym[0]);
      }
    else
      m.alphabet = {'0', '1'};
    std::vector<std::string> names;
    for (const auto& s : doc.at("states")) names.push_back(s.get<std::string>());
    m.state_names = names;
    auto state_id = [&names](const std::string& s) {
      auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end()) throw SpecLoadError("unknown state '" + s + "'");
      return static_cast<int>(it - names.begin());
    };
    m.start = doc.contains("start") ? state_id(doc.at("start").get<std::string>()) : 0;
    m.halting.assign(names.size(), false);
    if (doc.contains("halting"))
      for (const auto& s : doc.at("halting")) m.halting[state_id(s.get<std::string>())] = true;
    if (doc.contains("advice")) {
      for (const auto& [key, val] : doc.at("advice").items()) {
        std::string a = val.get<std::string>();
        if (key == "default") {
          m.default_advice = a;
        } else {
          m.advice[std::stoull(key)] = a;
        }
        m.max_advice_length = std::max(m.max_advice_length, a.size());
      }
    }
    if (doc.contains("max_advice_length"))
      m.max_advice_length = doc.at("max_advice_length").get<std::size_t>();
    m.allocate_delta();
    const auto& table = doc.at("transitions");
    for (const auto& [state_name, rules] : table.items()) {
      int q = state_id(state_name);
      for (const auto& [key, rule] : rules.items()) {
        auto comma = key.find(',');
        if (comma == std::string::npos || comma + 2 != key.size())
          throw SpecLoadError("transition key '" + key + "' is not 'x,y'");
        int ci = m.symbol_index(key[0]);
        int ca = m.symbol_index(key[comma + 1]);
        if (!rule.is_array() || rule.size() != 4)
          throw SpecLoadError("transition rule must be [next, move, move, out]");
        DfaStep s;
        s.next = state_id(rule[0].get<std::string>());
        for (int h = 0; h < 2; ++h) {
          std::string mv = rule[1 + h].get<std::string>();
          if (mv != "L" && mv != "R") throw SpecLoadError("head moves must be \"L\" or \"R\"");
          (h == 0 ? s.move_input : s.move_advice) = mv == "L" ? -1 : 1;
        }
        std::string out = rule[3].get<std::string>();
        if (out.empty()) {
          s.out = -1;
        } else if (out.size() == 1 && digit_value(out[0]) >= 0) {
          s.out = digit_value(out[0]);
        } else {
          throw SpecLoadError("output must be a single digit or empty");
        }
        m.delta[q][ci][ca] = s;
      }
      if (!m.halting[q])
        for (std::size_t ci = 0; ci < m.symbol_count(); ++ci)
          for (std::size_t ca = 0; ca < m.symbol_count(); ++ca)
            if (!rules.contains(std::string(1, ci == 0 ? '^' : ci == 1 ? '$' : m.alphabet[ci - 2]) +
                                "," +
                                std::string(1, ca == 0 ? '^' : ca == 1 ? '$' : m.alphabet[ca - 2])))
              throw SpecLoadError("state '" + state_name + "' is missing a transition; delta must be total on non-halting states");
    }
    for (std::size_t q = 0; q < names.size(); ++q)
      if (!m.halting[q] && !table.contains(names[q]))
        throw SpecLoadError("state '" + names[q] + "' has no transitions; delta must be total on non-halting states");
    m.validate();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw SpecLoadError(std::string("machine JSON: ") + e.what());
  }
}

namespace {

struct Simulation {
  const AdvicedDFA& dfa;
  std::uint64_t n;
  const std::string& adv;
  std::uint64_t l;
  int q;
  std::uint64_t h1 = 0;
  std::uint64_t h2 = 0;

  Simulation(const AdvicedDFA& d, std::uint64_t n_)
      : dfa(d), n(n_), adv(d.advice_for(n_)), l(adv.size()), q(d.start) {}

  int input_symbol() const {
    if (h1 == 0) return 0;
    if (h1 == n + 1) return 1;
    return dfa.symbol_index('0');
  }
  int advice_symbol() const {
    if (h2 == 0) return 0;
    if (h2 == l + 1) return 1;
    return dfa.symbol_index(adv[h2 - 1]);
  }
  std::size_t config_index() const {
    return (static_cast<std::size_t>(q) * (n + 2) + h1) * (l + 2) + h2;
  }
  std::size_t config_count() const { return dfa.state_count() * (n + 2) * (l + 2); }

  /// Returns the emitted digit value or -1.
  int step() {
    const DfaStep& s = dfa.delta[q][input_symbol()][advice_symbol()];
    int out = s.out;
    q = s.next;
    if (s.move_input < 0) {
      if (h1 > 0) --h1;
    } else if (h1 < n + 1) {
      ++h1;
    }
    if (s.move_advice < 0) {
      if (h2 > 0) --h2;
    } else if (h2 < l + 1) {
      ++h2;
    }
    return out;
  }
};

/// Minimal preperiod, primitive period, lexicographically least rotation.
void canonicalize(std::string& w1, std::string& w2) {
  for (std::size_t d = 1; d < w2.size(); ++d) {
    if (w2.size() % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < w2.size() && repeats; ++i) repeats = w2[i] == w2[i % d];
    if (repeats) {
      w2.resize(d);
      break;
    }
  }
  while (!w1.empty() && w1.back() == w2.back()) {
    w2.insert(w2.begin(), w2.back());
    w2.pop_back();
    w1.pop_back();
  }
  std::size_t best = 0;
  std::string rotated = w2;
  for (std::size_t r = 1; r < w2.size(); ++r) {
    std::string cand = w2.substr(r) + w2.substr(0, r);
    if (cand < rotated) {
      rotated = std::move(cand);
      best = r;
    }
  }
  w1 += w2.substr(0, best);
  w2 = rotated;
}

}  // namespace

RunResult run(const AdvicedDFA& dfa, std::uint64_t n, std::size_t max_output) {
  Simulation sim(dfa, n);
  std::vector<std::uint8_t> visited(sim.config_count(), 0);
  RunResult res;
  while (true) {
    if (dfa.halting[sim.q]) {
      res.halted = true;
      return res;
    }
    if (res.output.size() >= max_output) return res;
    std::uint8_t& mark = visited[sim.config_index()];
    if (mark) return res;
    mark = 1;
    int out = sim.step();
    ++res.steps;
    if (out >= 0) res.output.push_back(digit_char(out));
  }
}

std::uint64_t configuration_bound(const AdvicedDFA& dfa, std::uint64_t n) {
  return dfa.state_count() * (n + 2) * (dfa.advice_for(n).size() + 2);
}

PeriodicityWitness detect_cycle(const AdvicedDFA& dfa, std::uint64_t n) {
  Simulation sim(dfa, n);
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> emitted_at(sim.config_count(), kUnseen);
  std::string output;
  PeriodicityWitness w;
  while (true) {
    if (dfa.halting[sim.q]) {
      w.kind = WitnessKind::HaltsFinite;
      w.w1 = std::move(output);
      return w;
    }
    std::size_t& first = emitted_at[sim.config_index()];
    if (first != kUnseen) {
      if (output.size() == first) {
        w.kind = WitnessKind::SilentLoop;
        w.w1 = std::move(output);
      } else {
        w.kind = WitnessKind::EventuallyPeriodicInfinite;
        w.w1 = output.substr(0, first);
        w.w2 = output.substr(first);
        canonicalize(w.w1, w.w2);
      }
      return w;
    }
    first = output.size();
    int out = sim.step();
    ++w.steps;
    if (out >= 0) output.push_back(digit_char(out));
  }
}

Rational rational_limit(const PeriodicityWitness& w, int base) {
  if (w.kind != WitnessKind::EventuallyPeriodicInfinite)
    throw NotPeriodic("witness does not describe an infinite periodic output");
  auto word_value = [base](const std::string& word) {
    BigUint v;
    for (char c : word) {
      int d = digit_value(c);
      if (d < 0 || d >= base)
        throw MalformedNumeral(std::string("digit '") + c + "' is outside the base");
      v.mul_u64(static_cast<std::uint64_t>(base));
      v.add_u64(static_cast<std::uint64_t>(d));
    }
    return v;
  };
  BigUint a = word_value(w.w1);
  BigUint b = word_value(w.w2);
  std::size_t p = w.w1.size(), q = w.w2.size();
  BigUint bq1 = BigUint::power(static_cast<std::uint64_t>(base), q);
  bq1.sub(BigUint(1));
  Rational r;
  r.num = BigUint::mul(a, bq1);
  r.num.add(b);
  r.den = BigUint::mul(BigUint::power(static_cast<std::uint64_t>(base), p), bq1);
  return rat_lowest_terms(r);
}

namespace {

Rational finite_output_value(const std::string& word, int base) {
  Rational r;
  BigUint v;
  for (char c : word) {
    int d = digit_value(c);
    if (d < 0 || d >= base)
      throw MalformedNumeral(std::string("digit '") + c + "' is outside the base");
    v.mul_u64(static_cast<std::uint64_t>(base));
    v.add_u64(static_cast<std::uint64_t>(d));
  }
  r.num = v;
  r.den = BigUint::power(static_cast<std::uint64_t>(base), word.size());
  return r;
}

}  // namespace

CheckReport check_computes(const AdvicedDFA& dfa, const DigitGenerator& g, std::size_t n_max,
                           std::size_t guard) {
  int base = g.base();
  CheckReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    PeriodicityWitness w = detect_cycle(dfa, n);
    CheckEntry entry;
    entry.n = n;
    entry.halted = w.kind == WitnessKind::HaltsFinite;
    entry.value = w.kind == WitnessKind::EventuallyPeriodicInfinite
                      ? rational_limit(w, base)
                      : finite_output_value(w.w1, base);
    SpaceMeter scratch;
    Dyadic approx = g.eval(n + guard, scratch);
    Rational target = rational_of_dyadic(
        Dyadic::from_digits(base, false, {0}, approx.frac_digits()));
    Rational tol;
    tol.num = BigUint(1);
    tol.den = BigUint::power(static_cast<std::uint64_t>(base), n);
    Rational slack;
    slack.num = BigUint(1);
    slack.den = BigUint::power(static_cast<std::uint64_t>(base), n + guard);
    tol = rat_add(tol, slack);
    entry.pass = rat_cmp(rat_abs(rat_sub(entry.value, target)), tol) <= 0;
    if (!entry.pass && report.all_pass) {
      report.all_pass = false;
      report.first_failure = n;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

AdvicedDFA make_digit_cycler(const std::string& digits) {
  if (digits.empty()) throw Error("cycler needs at least one digit");
  AdvicedDFA m;
  m.alphabet = {'0', '1'};
  for (std::size_t i = 0; i < digits.size(); ++i) m.state_names.push_back("c" + std::to_string(i));
  m.halting.assign(digits.size(), false);
  m.allocate_delta();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    int d = digit_value(digits[i]);
    if (d < 0) throw Error("cycler digits must be digits");
    DfaStep s{static_cast<int>((i + 1) % digits.size()), 1, 1, d};
    for (auto& by_advice : m.delta[i]) std::fill(by_advice.begin(), by_advice.end(), s);
  }
  m.validate();
  return m;
}

AdvicedDFA make_five_twelfths_machine() {
  AdvicedDFA m;
  m.alphabet = {'0', '1'};
  m.state_names = {"a", "b"};
  m.halting = {false, false};
  m.allocate_delta();
  // The advice tape is empty, so its head only ever sees ^ (position 0) or
  // $ (position 1); that position is the machine's second bit of state.
  DfaStep a_at_left{1, 1, -1, 0};   // emit 0, park the advice head at ^
  DfaStep a_at_right{1, 1, 1, 1};   // emit 1, stay on $
  DfaStep b_at_left{0, 1, 1, 1};    // emit 1, advance the advice head to $
  DfaStep b_at_right{0, 1, 1, 0};   // emit 0, stay on $
  for (std::size_t ci = 0; ci < m.symbol_count(); ++ci)
    for (std::size_t ca = 0; ca < m.symbol_count(); ++ca) {
      bool at_right = ca == 1;
      m.delta[0][ci][ca] = at_right ? a_at_right : a_at_left;
      m.delta[1][ci][ca] = at_right ? b_at_right : b_at_left;
    }
  m.validate();
  return m;
}

AdvicedDFA random_machine(std::mt19937_64& rng, std::size_t max_states, std::size_t max_advice) {
  AdvicedDFA m;
  m.alphabet = {'0', '1'};
  std::size_t k = 1 + rng() % max_states;
  for (std::size_t i = 0; i < k; ++i) m.state_names.push_back("s" + std::to_string(i));
  m.halting.resize(k);
  for (std::size_t i = 0; i < k; ++i) m.halting[i] = rng() % 8 == 0;
  m.max_advice_length = max_advice;
  std::size_t adv_len = rng() % (max_advice + 1);
  for (std::size_t i = 0; i < adv_len; ++i)
    m.default_advice.push_back(m.alphabet[rng() % m.alphabet.size()]);
  m.allocate_delta();
  for (auto& by_input : m.delta)
    for (auto& by_advice : by_input)
      for (DfaStep& s : by_advice) {
        s.next = static_cast<int>(rng() % k);
        s.move_input = rng() % 2 ? 1 : -1;
        s.move_advice = rng() % 2 ? 1 : -1;
        std::uint64_t o = rng() % 3;
        s.out = o == 0 ? -1 : static_cast<int>(o - 1);
      }
  m.validate();
  return m;
}

namespace {

struct FamilySearch {
  const DigitGenerator& g;
  std::size_t n_max;
  std::uint64_t budget;
  std::size_t guard;
  std::vector<Rational> targets;  // by n, 1-based
  std::vector<Rational> tols;
  AdvicedDFA mach;
  std::vector<std::uint8_t> assigned;  // parallel to flattened delta
  SearchResult result;

  FamilySearch(const DigitGenerator& gen, std::size_t nm, std::uint64_t b, std::size_t gd)
      : g(gen), n_max(nm), budget(b), guard(gd) {
    int base = g.base();
    targets.resize(n_max + 1);
    tols.resize(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
      SpaceMeter scratch;
      Dyadic approx = g.eval(n + guard, scratch);
      targets[n] =
          rational_of_dyadic(Dyadic::from_digits(base, false, {0}, approx.frac_digits()));
      Rational tol;
      tol.num = BigUint(1);
      tol.den = BigUint::power(static_cast<std::uint64_t>(base), n);
      Rational slack;
      slack.num = BigUint(1);
      slack.den = BigUint::power(static_cast<std::uint64_t>(base), n + guard);
      tols[n] = rat_add(tol, slack);
    }
  }

  std::size_t flat_index(int q, int ci, int ca) const {
    return (static_cast<std::size_t>(q) * mach.symbol_count() + ci) * mach.symbol_count() + ca;
  }

  enum class SimOutcome { Pass, Fail, NeedSlot };

  /// Cycle-detecting run of the current partial machine on length n;
  /// stops at the first transition entry nobody has chosen yet.
  SimOutcome simulate(std::size_t n, std::size_t& slot_out) {
    ++result.nodes;
    Simulation sim(mach, n);
    std::vector<std::size_t> emitted_at(sim.config_count(), static_cast<std::size_t>(-1));
    std::string output;
    PeriodicityWitness w;
    bool decided = false;
    while (!decided) {
      if (mach.halting[sim.q]) {
        w.kind = WitnessKind::HaltsFinite;
        w.w1 = output;
        decided = true;
        break;
      }
      std::size_t slot = flat_index(sim.q, sim.input_symbol(), sim.advice_symbol());
      if (!assigned[slot]) {
        slot_out = slot;
        return SimOutcome::NeedSlot;
      }
      std::size_t& first = emitted_at[sim.config_index()];
      if (first != static_cast<std::size_t>(-1)) {
        if (output.size() == first) {
          w.kind = WitnessKind::SilentLoop;
          w.w1 = output;
        } else {
          w.kind = WitnessKind::EventuallyPeriodicInfinite;
          w.w1 = output.substr(0, first);
          w.w2 = output.substr(first);
        }
        decided = true;
        break;
      }
      first = output.size();
      int out = sim.step();
      if (out >= 0) output.push_back(digit_char(out));
    }
    Rational value = w.kind == WitnessKind::EventuallyPeriodicInfinite
                         ? rational_limit(w, g.base())
                         : finite_output_value(w.w1, g.base());
    bool ok = rat_cmp(rat_abs(rat_sub(value, targets[n])), tols[n]) <= 0;
    return ok ? SimOutcome::Pass : SimOutcome::Fail;
  }

  void dfs(std::size_t n) {
    if (result.found || result.budget_exhausted) return;
    if (result.nodes >= budget) {
      result.budget_exhausted = true;
      return;
    }
    for (; n <= n_max; ++n) {
      std::size_t slot = 0;
      SimOutcome outcome = simulate(n, slot);
      if (outcome == SimOutcome::Fail) return;
      if (outcome == SimOutcome::NeedSlot) {
        int q = static_cast<int>(slot / (mach.symbol_count() * mach.symbol_count()));
        int ci = static_cast<int>(slot / mach.symbol_count() % mach.symbol_count());
        int ca = static_cast<int>(slot % mach.symbol_count());
        assigned[slot] = 1;
        for (int next = 0; next < static_cast<int>(mach.state_count()); ++next)
          for (int m1 : {1, -1})
            for (int m2 : {1, -1})
              for (int out : {-1, 0, 1}) {
                mach.delta[q][ci][ca] = DfaStep{next, m1, m2, out};
                dfs(n);
                if (result.found || result.budget_exhausted) return;
              }
        assigned[slot] = 0;
        return;
      }
    }
    result.found = true;
    result.machine = mach;
  }

  void search_shape(std::size_t k, unsigned halting_mask) {
    mach = AdvicedDFA{};
    mach.alphabet = {'0', '1'};
    for (std::size_t i = 0; i < k; ++i) mach.state_names.push_back("s" + std::to_string(i));
    mach.halting.resize(k);
    for (std::size_t i = 0; i < k; ++i) mach.halting[i] = (halting_mask >> i) & 1;
    mach.allocate_delta();
    assigned.assign(k * mach.symbol_count() * mach.symbol_count(), 0);
    dfs(1);
  }
};

}  // namespace

SearchResult search_two_state_family(const DigitGenerator& g, std::size_t n_max,
                                     std::uint64_t node_budget, std::size_t guard) {
  FamilySearch search(g, n_max, node_budget, guard);
  for (std::size_t k = 1; k <= 2 && !search.result.found && !search.result.budget_exhausted; ++k)
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      search.search_shape(k, mask);
      if (search.result.found || search.result.budget_exhausted) break;
    }
  return search.result;
}

}  // namespace realspace
