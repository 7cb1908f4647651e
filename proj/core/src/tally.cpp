#include "realspace/tally.hpp"

#include <ostream>

#include "realspace/errors.hpp"

namespace realspace {

bool OracleHandle::record(const std::string& query, bool answer) {
  ++queries_;
  if (transcript_enabled_) transcript_.emplace_back(query, answer);
  return answer;
}

void OracleHandle::write_transcript_csv(std::ostream& os) const {
  os << "query,answer\n";
  for (const auto& [query, answer] : transcript_) os << query << ',' << (answer ? 1 : 0) << '\n';
}

bool TallyOracle::member(std::uint64_t len) {
  return record(std::to_string(len), membership_(len));
}

bool LeftcutOracle::member(const Dyadic& d) { return record(d.str(), membership_(d)); }

TallyTriple decode_triple(std::uint64_t len, SpaceMeter& meter) {
  MeteredInt h(meter), inner(meter), nn(meter), ii(meter), bb(meter);
  h.set_u64(len);
  unpair(h, inner, bb, meter);
  unpair(inner, nn, ii, meter);
  TallyTriple t{nn.to_u64(), ii.to_u64(), static_cast<int>(bb.to_u64())};
  if (bb.to_u64() > 1 || t.i < 1 || t.i > t.n)
    throw InvalidTriple("length " + std::to_string(len) + " does not encode <n,i,b>");
  return t;
}

bool tally_member(std::uint64_t len, const DigitGenerator& g, SpaceMeter& meter) {
  if (g.base() != 2) throw BaseMismatch("tally sets are defined over base-2 generators");
  TallyTriple t;
  try {
    t = decode_triple(len, meter);
  } catch (const InvalidTriple&) {
    return false;
  }
  return digit_in_run(g, t.i, t.n, meter) == t.b;
}

namespace {

void require_unit_interval(const Dyadic& d) {
  if (d.base() != 2) throw MalformedNumeral("left-cut numerals are base 2");
  if (d.negative()) throw MalformedNumeral("left-cut numerals are non-negative");
  for (auto digit : d.int_digits())
    if (digit != 0) throw MalformedNumeral("left-cut numerals lie in [0,1)");
}

/// Streams the generated digits against the fixed numeral d; the first
/// strict difference decides, equality all the way through means d is a
/// member.  The position inside d is the input head, not a work register.
class CompareSink final : public DigitSink {
public:
  explicit CompareSink(const Dyadic& d) : d_(d), n_(d.prec()) {}
  void integer_digit(int) override {}
  void fraction_point() override {}
  void fraction_digit(int gd) override {
    if (decided_ || idx_ >= n_) return;
    ++idx_;
    int dd = d_.fraction_digit(idx_);
    if (gd != dd) {
      decided_ = true;
      answer_ = gd > dd;
    }
  }
  SinkState state() const override {
    if (decided_) return SinkState::Stopped;
    return idx_ >= n_ ? SinkState::Saturated : SinkState::Running;
  }
  bool decided() const { return decided_; }
  bool answer() const { return answer_; }

private:
  const Dyadic& d_;
  std::size_t n_;
  std::size_t idx_ = 0;
  bool decided_ = false;
  bool answer_ = false;
};

}  // namespace

bool leftcut_member(const Dyadic& d, const DigitGenerator& g, SpaceMeter& meter) {
  if (g.base() != 2) throw BaseMismatch("left cuts are defined over base-2 generators");
  require_unit_interval(d);
  std::size_t n = d.prec();
  MeteredInt prec_reg(meter);
  prec_reg.set_u64(n);
  CompareSink sink(d);
  FakeUnaryInput input(meter, n);
  g.generate(input, sink, meter);
  return sink.decided() ? sink.answer() : true;
}

TallyOracle tally_oracle(const DigitGenerator& g) {
  if (g.base() != 2) throw BaseMismatch("tally sets are defined over base-2 generators");
  return TallyOracle([&g](std::uint64_t len) {
    TallyTriple t;
    if (!try_unpair3(len, t)) return false;
    SpaceMeter scratch;
    return digit_in_run(g, t.i, t.n, scratch) == t.b;
  });
}

LeftcutOracle leftcut_oracle(const DigitGenerator& g) {
  if (g.base() != 2) throw BaseMismatch("left cuts are defined over base-2 generators");
  return LeftcutOracle([&g](const Dyadic& d) {
    SpaceMeter scratch;
    return leftcut_member(d, g, scratch);
  });
}

Dyadic digits_from_tally(TallyOracle& oracle, std::size_t n, SpaceMeter& meter,
                         TallyScanMode mode) {
  if (n > 40000) throw Error("tally reconstruction limited to n <= 40000");
  std::vector<std::uint8_t> digits;
  digits.reserve(n);
  if (mode == TallyScanMode::Faithful) {
    MeteredInt pos(meter), counter(meter), inner(meter), m(meter), j(meter), k(meter);
    pos.set_u64(1);
    while (digits.size() < n) {
      std::uint64_t pos_v = digits.size() + 1;
      // One past the larger sibling: a consistent oracle must answer by then.
      std::uint64_t cap = pair3(n, pos_v, 1) + 1;
      counter.set_zero();
      bool found = false;
      while (!found) {
        std::uint64_t c = counter.to_u64();
        if (c >= cap)
          throw InconsistentOracle("no digit claimed at position " + std::to_string(pos_v));
        if (oracle.member(c)) {
          unpair(counter, inner, k, meter);
          unpair(inner, m, j, meter);
          if (m.to_u64() == n && j.to_u64() == pos_v) {
            std::uint64_t kv = k.to_u64();
            if (kv > 1)
              throw InconsistentOracle("non-binary digit claimed at position " +
                                       std::to_string(pos_v));
            if (oracle.member(pair3(n, pos_v, static_cast<int>(kv ^ 1))))
              throw InconsistentOracle("both digits claimed at position " + std::to_string(pos_v));
            digits.push_back(static_cast<std::uint8_t>(kv));
            pos.increment();
            found = true;
          }
        }
        if (!found) counter.increment();
      }
    }
  } else {
    MeteredInt nreg(meter), posreg(meter), breg(meter), inner(meter), out(meter);
    nreg.set_u64(n);
    posreg.set_u64(1);
    for (std::size_t pos_v = 1; pos_v <= n; ++pos_v) {
      pair(nreg, posreg, inner, meter);
      breg.set_zero();
      pair(inner, breg, out, meter);
      bool a0 = oracle.member(out.to_u64());
      breg.set_u64(1);
      pair(inner, breg, out, meter);
      bool a1 = oracle.member(out.to_u64());
      if (a0 == a1)
        throw InconsistentOracle(std::string(a0 ? "both digits" : "no digit") +
                                 " claimed at position " + std::to_string(pos_v));
      digits.push_back(a1 ? 1 : 0);
      posreg.increment();
    }
  }
  return Dyadic::from_digits(2, false, {0}, std::move(digits));
}

bool leftcut_via_tally(const Dyadic& d, TallyOracle& oracle, SpaceMeter& meter) {
  require_unit_interval(d);
  std::size_t n = d.prec();
  MeteredInt nreg(meter), posreg(meter), breg(meter), inner(meter), out(meter);
  nreg.set_u64(n);
  posreg.set_u64(1);
  for (std::size_t i = 1; i <= n; ++i) {
    pair(nreg, posreg, inner, meter);
    breg.set_zero();
    pair(inner, breg, out, meter);
    bool a0 = oracle.member(out.to_u64());
    breg.set_u64(1);
    pair(inner, breg, out, meter);
    bool a1 = oracle.member(out.to_u64());
    if (a0 == a1)
      throw InconsistentOracle(std::string(a0 ? "both digits" : "no digit") +
                               " claimed at position " + std::to_string(i));
    int bi = a1 ? 1 : 0;
    int di = d.fraction_digit(i);
    if (bi > di) return true;
    if (bi < di) return false;
    posreg.increment();
  }
  return true;
}

bool tally_via_leftcut(std::uint64_t len, LeftcutOracle& oracle, SpaceMeter& meter,
                       CutSearchMode mode) {
  TallyTriple t = decode_triple(len, meter);
  std::size_t m = static_cast<std::size_t>(t.n);
  std::vector<std::uint8_t> found(m, 0);
  if (mode == CutSearchMode::Greedy) {
    // The cut restricted to m-digit numerals is downward closed in value,
    // so locking in the highest admissible bit at each position finds the
    // maximum member with exactly m queries.
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::uint8_t> candidate = found;
      candidate[j] = 1;
      if (oracle.member(Dyadic::from_digits(2, false, {0}, std::move(candidate)))) found[j] = 1;
    }
  } else {
    if (m > 12) throw Error("exhaustive cut search limited to m <= 12");
    bool any = false;
    std::uint64_t best = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
      std::vector<std::uint8_t> candidate(m);
      for (std::size_t j = 0; j < m; ++j)
        candidate[j] = static_cast<std::uint8_t>((v >> (m - 1 - j)) & 1);
      if (oracle.member(Dyadic::from_digits(2, false, {0}, std::move(candidate)))) {
        if (!any || v > best) best = v;
        any = true;
      }
    }
    if (!any) throw InconsistentOracle("left-cut oracle admits no length-" + std::to_string(m) +
                                       " members, not even zero");
    for (std::size_t j = 0; j < m; ++j)
      found[j] = static_cast<std::uint8_t>((best >> (m - 1 - j)) & 1);
  }
  return found[t.i - 1] == t.b;
}

bool indicator_tally_reduce(std::uint64_t len, TallyOracle& set_oracle, SpaceMeter& meter) {
  TallyTriple t = decode_triple(len, meter);
  bool in_set = set_oracle.member(t.i);
  return (t.b == 1) == in_set;
}

}  // namespace realspace
