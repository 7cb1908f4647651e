#ifndef REALSPACE_TALLY_HPP
#define REALSPACE_TALLY_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "realspace/dyadic.hpp"
#include "realspace/meter.hpp"
#include "realspace/pairing.hpp"

namespace realspace {

enum class OracleKind { Tally, Leftcut };

/// Shared bookkeeping for membership oracles: every question costs one
/// counted query, optionally transcribed.
class OracleHandle {
public:
  explicit OracleHandle(OracleKind kind) : kind_(kind) {}
  virtual ~OracleHandle() = default;

  OracleKind kind() const { return kind_; }
  std::uint64_t query_count() const { return queries_; }
  void reset_query_count() { queries_ = 0; }
  void enable_transcript() { transcript_enabled_ = true; }
  const std::vector<std::pair<std::string, bool>>& transcript() const { return transcript_; }
  /// Header "query,answer"; answers rendered 0/1.
  void write_transcript_csv(std::ostream& os) const;

protected:
  bool record(const std::string& query, bool answer);

private:
  OracleKind kind_;
  std::uint64_t queries_ = 0;
  bool transcript_enabled_ = false;
  std::vector<std::pair<std::string, bool>> transcript_;
};

/// Unary-language oracle: membership of 0^len asked by length.
class TallyOracle final : public OracleHandle {
public:
  explicit TallyOracle(std::function<bool(std::uint64_t)> membership)
      : OracleHandle(OracleKind::Tally), membership_(std::move(membership)) {}
  bool member(std::uint64_t len);

private:
  std::function<bool(std::uint64_t)> membership_;
};

/// Oracle over dyadic numerals.
class LeftcutOracle final : public OracleHandle {
public:
  explicit LeftcutOracle(std::function<bool(const Dyadic&)> membership)
      : OracleHandle(OracleKind::Leftcut), membership_(std::move(membership)) {}
  bool member(const Dyadic& d);

private:
  std::function<bool(const Dyadic&)> membership_;
};

/// Decode len as <<n,i>,b> on metered registers and validate 1 <= i <= n,
/// b in {0,1}; throws InvalidTriple.
TallyTriple decode_triple(std::uint64_t len, SpaceMeter& meter);

/// True iff len encodes <n,i,b> and the i-th fractional digit of a
/// length-n evaluation of g equals b; malformed lengths are non-members.
/// The generator must be base 2; its integer part is ignored (numbers are
/// normalized into [0,1)).
bool tally_member(std::uint64_t len, const DigitGenerator& g, SpaceMeter& meter);

/// True iff d <= the length-prec(d) evaluation of g, both normalized into
/// [0,1): digits stream against d and the first strict difference decides.
/// The generator runs behind the simulated unary input, so its input-head
/// position is a charged register here.  d must be base 2, non-negative,
/// with a zero integer part.
bool leftcut_member(const Dyadic& d, const DigitGenerator& g, SpaceMeter& meter);

/// Oracles answering from a generator; the generator must outlive the
/// oracle.  Answers run on private scratch meters (oracle work is not
/// charged to the querying machine).
TallyOracle tally_oracle(const DigitGenerator& g);
LeftcutOracle leftcut_oracle(const DigitGenerator& g);

enum class TallyScanMode {
  Faithful,  // enumerate counter = 0,1,2,... and react to members
  Fast,      // ask both bits of each position directly
};

/// Reconstruct the length-n numeral from a tally oracle.  Faithful mode
/// walks counter values one by one, resetting on each hit; fast mode asks
/// the two candidate triples per position.  Either way each position must
/// have exactly one member bit, else InconsistentOracle.
Dyadic digits_from_tally(TallyOracle& oracle, std::size_t n, SpaceMeter& meter,
                         TallyScanMode mode = TallyScanMode::Fast);

/// Decide d <= phi(prec(d)) with two tally queries per position, most
/// significant first, early exit on the first strict difference.
bool leftcut_via_tally(const Dyadic& d, TallyOracle& oracle, SpaceMeter& meter);

enum class CutSearchMode {
  Greedy,      // most-significant-bit descent, exactly m queries
  Exhaustive,  // try every candidate in D_m; small m only
};

/// Decide tally membership of len through a left-cut oracle: find the
/// largest member d of D_m and compare its i-th digit with b.
bool tally_via_leftcut(std::uint64_t len, LeftcutOracle& oracle, SpaceMeter& meter,
                       CutSearchMode mode = CutSearchMode::Greedy);

/// Tally membership for the indicator number of a set A: accept iff the
/// decoded triple asks for bit 1 at a member position or bit 0 at a
/// non-member position.  One query to the set oracle.
bool indicator_tally_reduce(std::uint64_t len, TallyOracle& set_oracle, SpaceMeter& meter);

}  // namespace realspace

#endif
