#include "realspace/generators.hpp"

#include <utility>

#include "json.hpp"
#include "realspace/errors.hpp"

namespace realspace {

namespace {

std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
}

void require_base(int base, const std::string& label) {
  if (base < 2 || base > 36) throw BaseMismatch(label + ": unsupported base " + std::to_string(base));
}

}  // namespace

RationalGen::RationalGen(const Rational& value, int base)
    : label_("rational " + to_string(value)),
      base_(base),
      negative_(value.negative && !value.num.is_zero()),
      num_(value.num),
      den_(value.den) {
  require_base(base, label_);
  if (den_.is_zero()) throw DivisionByZero();
}

RationalGen::RationalGen(std::int64_t p, std::int64_t q, int base)
    : RationalGen(make_rational(p, q), base) {}

void RationalGen::generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const {
  MeteredInt num(meter), den(meter), quot(meter), rem(meter);
  num.set_value(num_);
  den.set_value(den_);
  int_div(num, den, quot, rem);
  std::vector<std::uint8_t> int_digits = quot.value().to_digits(static_cast<unsigned>(base_));
  if (int_digits.empty()) int_digits.push_back(0);
  for (std::uint8_t d : int_digits) sink.integer_digit(d);
  sink.fraction_point();
  MeteredInt digit(meter), next(meter);
  while (input.read() != kBlank) {
    if (sink.state() == SinkState::Stopped) return;
    rem.mul_const(static_cast<std::uint64_t>(base_));
    int_div(rem, den, digit, next);
    sink.fraction_digit(static_cast<int>(digit.to_u64()));
    rem.set_copy(next);
    input.move(Move::Right);
  }
}

AlgebraicSpec load_algebraic_spec(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw SpecLoadError(std::string("bad JSON: ") + e.what());
  }
  AlgebraicSpec spec;
  try {
    if (!doc.contains("coeffs") || !doc["coeffs"].is_array())
      throw SpecLoadError("missing coefficient array 'coeffs'");
    for (const auto& c : doc["coeffs"]) spec.coeffs.push_back(c.get<std::int64_t>());
    std::string seed_text = doc.value("seed", std::string("0"));
    spec.seed = Dyadic::parse(seed_text, 2);
    spec.k = doc.value("k", static_cast<std::uint64_t>(spec.seed.prec()));
  } catch (const nlohmann::json::exception& e) {
    throw SpecLoadError(std::string("bad root description: ") + e.what());
  }
  return spec;
}

AlgebraicGen::AlgebraicGen(std::string label, AlgebraicSpec spec)
    : label_(std::move(label)), spec_(std::move(spec)) {
  if (spec_.coeffs.size() < 2) throw SeedInvalid(label_ + ": polynomial degree must be at least 1");
  if (spec_.coeffs.back() == 0) throw SeedInvalid(label_ + ": leading coefficient is zero");
  if (spec_.seed.base() != 2) throw SeedInvalid(label_ + ": seed must be a base-2 numeral");
  if (spec_.seed.negative()) throw SeedInvalid(label_ + ": seed must be non-negative");
  if (spec_.k != spec_.seed.prec())
    throw SeedInvalid(label_ + ": k does not match the seed precision");
  std::vector<std::uint8_t> digits = spec_.seed.int_digits();
  digits.insert(digits.end(), spec_.seed.frac_digits().begin(), spec_.seed.frac_digits().end());
  seed_numerator_ = BigUint::from_digits(2, digits);
  spec_.sign_flipped = false;
  if (!bracket_holds(seed_numerator_, spec_.k)) {
    spec_.sign_flipped = true;
    if (!bracket_holds(seed_numerator_, spec_.k))
      throw SeedInvalid(label_ + ": seed does not bracket a root of f or -f");
  }
}

int AlgebraicGen::scaled_sign(const BigUint& m, std::size_t scale, SpaceMeter& meter) const {
  // Sign of f(m / 2^scale), read off the integer sum a_j * m^j * 2^(scale*(r-j)).
  const std::vector<std::int64_t>& a = spec_.coeffs;
  std::size_t r = a.size() - 1;
  MeteredInt mreg(meter), acc(meter), term(meter), tmp(meter);
  mreg.set_value(m);
  bool neg = a[r] < 0;
  acc.set_u64(magnitude(a[r]));
  for (std::size_t j = r; j-- > 0;) {
    acc.assign_product(acc, mreg);
    if (a[j] == 0) continue;
    term.set_u64(magnitude(a[j]));
    term.shl(scale * (r - j));
    bool tneg = a[j] < 0;
    if (neg == tneg) {
      acc.add(term);
    } else if (acc.cmp(term) >= 0) {
      acc.sub(term);
    } else {
      tmp.set_copy(term);
      tmp.sub(acc);
      acc.set_copy(tmp);
      neg = tneg;
    }
  }
  int s = acc.is_zero() ? 0 : (neg ? -1 : 1);
  return spec_.sign_flipped ? -s : s;
}

bool AlgebraicGen::bracket_holds(const BigUint& numerator, std::size_t scale) const {
  SpaceMeter scratch;
  if (scaled_sign(numerator, scale, scratch) > 0) return false;
  BigUint above = numerator;
  above.add_u64(1);
  return scaled_sign(above, scale, scratch) > 0;
}

void AlgebraicGen::generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const {
  for (std::uint8_t d : spec_.seed.int_digits()) sink.integer_digit(d);
  sink.fraction_point();
  MeteredInt t0(meter), m(meter);
  t0.set_value(seed_numerator_);
  std::size_t scale = spec_.k;
  std::size_t emitted = 0;
  while (input.read() != kBlank) {
    if (sink.state() == SinkState::Stopped) return;
    if (emitted < spec_.k) {
      sink.fraction_digit(spec_.seed.fraction_digit(emitted + 1));
      ++emitted;
      input.move(Move::Right);
      continue;
    }
    m.set_copy(t0);
    m.shl(1);
    m.increment();
    if (scaled_sign(m.value(), scale + 1, meter) <= 0) {
      sink.fraction_digit(1);
      t0.set_copy(m);
    } else {
      sink.fraction_digit(0);
      t0.shl(1);
    }
    ++scale;
    ++emitted;
    if (!bracket_holds(t0.value(), scale))
      throw Error(label_ + ": refinement bracket broken at scale " + std::to_string(scale));
    input.move(Move::Right);
  }
}

ExponentFunction ExponentFunction::power_fn(unsigned d) {
  if (d == 0) throw NotIncreasing("exponent power must be positive");
  ExponentFunction f;
  f.kind = Kind::Power;
  f.power = d;
  return f;
}

ExponentFunction ExponentFunction::factorial() {
  ExponentFunction f;
  f.kind = Kind::Factorial;
  return f;
}

ExponentFunction ExponentFunction::custom(std::vector<std::uint64_t> table) {
  if (table.empty() || table.front() < 1)
    throw NotIncreasing("exponent table must start at a positive value");
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i] <= table[i - 1])
      throw NotIncreasing("exponent table must be strictly increasing at index " +
                          std::to_string(i));
  }
  ExponentFunction f;
  f.kind = Kind::Table;
  f.table = std::move(table);
  return f;
}

MuGen::MuGen(std::string label, ExponentFunction f, int base)
    : label_(std::move(label)), f_(std::move(f)), base_(base) {
  require_base(base, label_);
}

void MuGen::apply_f(MeteredInt& res, const MeteredInt& pos_in, std::uint64_t step,
                    SpaceMeter& meter) const {
  (void)meter;
  switch (f_.kind) {
    case ExponentFunction::Kind::Power:
      res.set_copy(pos_in);
      for (unsigned u = 1; u < f_.power; ++u) res.assign_product(res, pos_in);
      break;
    case ExponentFunction::Kind::Factorial:
      if (step == 1) res.set_u64(1);
      res.assign_product(res, pos_in);
      break;
    case ExponentFunction::Kind::Table:
      if (step > f_.table.size()) throw Error(label_ + ": exponent table exhausted");
      res.set_u64(f_.table[step - 1]);
      break;
  }
}

void MuGen::generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const {
  sink.integer_digit(0);
  sink.fraction_point();
  if (input.read() == kBlank) return;
  MeteredInt pos_in(meter, 1), pos_out(meter, 1), res(meter);
  std::uint64_t step = 1;
  bool live = true;
  while (input.read() != kBlank) {
    apply_f(res, pos_in, step, meter);
    if (res.cmp(pos_out) < 0) throw NotIncreasing(label_ + ": output position would move left");
    while (live && sink.state() == SinkState::Running && pos_out.cmp(res) < 0) {
      sink.fraction_digit(0);
      pos_out.increment();
    }
    if (sink.state() == SinkState::Stopped) return;
    if (live && sink.state() == SinkState::Running) {
      sink.fraction_digit(1);
      pos_out.increment();
      if (sink.state() == SinkState::Stopped) return;
    } else {
      live = false;
      // Saturated: jump the output position to where the faithful stream
      // would stand; same registers, same high water, no emissions.
      if (pos_out.cmp(res) <= 0) {
        pos_out.set_copy(res);
        pos_out.increment();
      }
    }
    if (sink.state() != SinkState::Running) live = false;
    input.move(Move::Right);
    pos_in.increment();
    ++step;
  }
}

AutomatonSpec load_automaton_spec(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw SpecLoadError(std::string("bad JSON: ") + e.what());
  }
  AutomatonSpec spec;
  try {
    spec.k = doc.value("k", 2);
    spec.b = doc.value("b", 2);
    if (!doc.contains("transitions") || !doc["transitions"].is_object())
      throw SpecLoadError("missing transition table 'transitions'");
    const auto& trans = doc["transitions"];
    for (auto it = trans.begin(); it != trans.end(); ++it) spec.states.push_back(it.key());
    auto state_id = [&](const std::string& name) -> int {
      for (std::size_t i = 0; i < spec.states.size(); ++i)
        if (spec.states[i] == name) return static_cast<int>(i);
      throw SpecLoadError("unknown state '" + name + "'");
    };
    std::string start = doc.value("start", spec.states.empty() ? std::string() : spec.states[0]);
    spec.start = state_id(start);
    for (const std::string& name : spec.states) {
      std::vector<int> row;
      for (int d = 0; d < spec.k; ++d) {
        std::string key = std::to_string(d);
        if (!trans[name].contains(key))
          throw SpecLoadError("state '" + name + "' has no transition on digit " + key);
        row.push_back(state_id(trans[name][key].get<std::string>()));
      }
      spec.transition.push_back(std::move(row));
    }
    if (!doc.contains("output") || !doc["output"].is_object())
      throw SpecLoadError("missing output map 'output'");
    for (const std::string& name : spec.states) {
      if (!doc["output"].contains(name))
        throw SpecLoadError("state '" + name + "' has no output digit");
      spec.output.push_back(doc["output"][name].get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecLoadError(std::string("bad automaton description: ") + e.what());
  }
  return spec;
}

AutomaticGen::AutomaticGen(std::string label, AutomatonSpec spec)
    : label_(std::move(label)), spec_(std::move(spec)) {
  if (spec_.k < 2) throw SpecLoadError(label_ + ": input radix must be at least 2");
  if (spec_.b < 2) throw SpecLoadError(label_ + ": output radix must be at least 2");
  std::size_t n = spec_.states.size();
  if (n == 0) throw SpecLoadError(label_ + ": no states");
  if (spec_.start < 0 || static_cast<std::size_t>(spec_.start) >= n)
    throw SpecLoadError(label_ + ": start state out of range");
  if (spec_.transition.size() != n || spec_.output.size() != n)
    throw SpecLoadError(label_ + ": transition or output table size mismatch");
  for (std::size_t s = 0; s < n; ++s) {
    if (spec_.transition[s].size() != static_cast<std::size_t>(spec_.k))
      throw SpecLoadError(label_ + ": transition row incomplete for state " + spec_.states[s]);
    for (int t : spec_.transition[s])
      if (t < 0 || static_cast<std::size_t>(t) >= n)
        throw SpecLoadError(label_ + ": transition target out of range");
    if (spec_.output[s] < 0 || spec_.output[s] >= spec_.b)
      throw SpecLoadError(label_ + ": output digit out of range for state " + spec_.states[s]);
  }
  if (spec_.transition[spec_.start][0] != spec_.start)
    throw SpecLoadError(label_ + ": start state must ignore leading zeros");
}

void AutomaticGen::generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const {
  sink.integer_digit(0);
  sink.fraction_point();
  MeteredTape count(meter, Alphabet{spec_.k});
  while (input.read() != kBlank) {
    if (sink.state() == SinkState::Stopped) return;
    // Increment the radix-k counter, least significant cell first.
    for (;;) {
      Symbol d = count.read();
      if (d == kBlank) {
        count.step(1, Move::Stay);
        break;
      }
      if (d == spec_.k - 1) {
        count.step(0, Move::Right);
        continue;
      }
      count.step(static_cast<Symbol>(d + 1), Move::Stay);
      break;
    }
    // Find the blank past the most significant digit, then run the
    // automaton scanning back down to cell 0.
    for (;;) {
      Symbol d = count.read();
      if (d == kBlank) break;
      count.step(d, Move::Right);
    }
    count.step(kBlank, Move::Left);
    int state = spec_.start;
    for (;;) {
      Symbol d = count.read();
      state = spec_.transition[state][d];
      if (count.head() == 0) break;
      count.step(d, Move::Left);
    }
    sink.fraction_digit(spec_.output[state]);
    input.move(Move::Right);
  }
}

IndicatorGen::IndicatorGen(std::string label, MembershipFn member, int base)
    : label_(std::move(label)), member_(std::move(member)), base_(base) {
  require_base(base, label_);
}

void IndicatorGen::generate(UnaryInput& input, DigitSink& sink, SpaceMeter& meter) const {
  sink.integer_digit(0);
  sink.fraction_point();
  MeteredInt position(meter);
  while (input.read() != kBlank) {
    if (sink.state() == SinkState::Stopped) return;
    position.increment();
    sink.fraction_digit(member_(position, meter) ? 1 : 0);
    input.move(Move::Right);
  }
}

bool prime_member(const MeteredInt& p, SpaceMeter& meter) {
  if (p.cmp_const(2) < 0) return false;
  MeteredInt divisor(meter, 2), square(meter), quot(meter), rem(meter);
  for (;;) {
    square.assign_product(divisor, divisor);
    if (square.cmp(p) > 0) return true;
    int_div(p, divisor, quot, rem);
    if (rem.is_zero()) return false;
    divisor.increment();
  }
}

}  // namespace realspace
