#ifndef REALSPACE_ADVDFA_HPP
#define REALSPACE_ADVDFA_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "realspace/dyadic.hpp"
#include "realspace/ratarith.hpp"

namespace realspace {

/// One transition: successor state, a strict left/right move per head, and
/// an emitted digit (-1 for no emission).
struct DfaStep {
  int next = 0;
  int move_input = 1;   // -1 or +1
  int move_advice = 1;  // -1 or +1
  int out = -1;         // -1, or a digit value
};

/// Two-tape finite automaton: a read-only unary input ^0^n$ and a read-only
/// advice string ^a_n$, both endmarked.  Each step reads both heads, moves
/// both heads (moves past an endmarker clamp in place), and may emit one
/// output digit.  Symbol indices: 0 = left endmarker, 1 = right endmarker,
/// 2+i = alphabet[i].
struct AdvicedDFA {
  std::vector<std::string> state_names;
  int start = 0;
  std::vector<bool> halting;
  std::vector<char> alphabet;
  std::size_t max_advice_length = 0;
  std::map<std::uint64_t, std::string> advice;
  std::string default_advice;
  bool has_default_advice = true;
  // delta[state][input symbol index][advice symbol index]
  std::vector<std::vector<std::vector<DfaStep>>> delta;

  std::size_t state_count() const { return state_names.size(); }
  std::size_t symbol_count() const { return 2 + alphabet.size(); }
  int symbol_index(char c) const;  // SpecLoadError for symbols outside the alphabet
  /// Dense delta table of the right shape, every entry defaulted.
  void allocate_delta();
  /// Structural checks; throws SpecLoadError.
  void validate() const;
  /// Advice word for input length n; falls back to the default, else throws
  /// AdviceMissing.
  const std::string& advice_for(std::uint64_t n) const;
};

/// Parse a machine from JSON: states, start, halting, alphabet, transitions
/// keyed "x,y" with "^"/"$" as endmarkers, advice keyed by n with an
/// optional "default".  Throws SpecLoadError.
AdvicedDFA load_adviced_dfa(std::istream& in);

struct RunResult {
  std::string output;
  bool halted = false;
  std::size_t steps = 0;
};

/// Deterministic simulation on input length n.  Stops at a halting state,
/// after max_output emissions, or when a configuration (state, input head,
/// advice head) repeats.
RunResult run(const AdvicedDFA& dfa, std::uint64_t n, std::size_t max_output);

/// Size of the configuration space, |Q| * (n+2) * (l+2): simulation must
/// repeat within this many steps plus one.
std::uint64_t configuration_bound(const AdvicedDFA& dfa, std::uint64_t n);

enum class WitnessKind { HaltsFinite, EventuallyPeriodicInfinite, SilentLoop };

/// Decomposition of a machine's output stream: the finite word w1 followed
/// by w2 repeated forever (w2 empty unless eventually periodic).
struct PeriodicityWitness {
  WitnessKind kind = WitnessKind::HaltsFinite;
  std::string w1;
  std::string w2;
  std::size_t steps = 0;
};

/// Simulate with full-configuration memoization; on the first repeated
/// configuration the output emitted between the repeats is the cycle word.
/// Periodic witnesses are canonicalized: w2 is primitive and
/// lexicographically least among its rotations, w1 the shortest prefix
/// consistent with that choice.
PeriodicityWitness detect_cycle(const AdvicedDFA& dfa, std::uint64_t n);

/// Exact value of 0.w1 w2 w2 w2... in the given base, in lowest terms.
/// Throws NotPeriodic unless the witness is eventually periodic, and
/// MalformedNumeral if a digit is outside the base.
Rational rational_limit(const PeriodicityWitness& w, int base);

struct CheckEntry {
  std::size_t n = 0;
  bool pass = false;
  bool halted = false;
  Rational value;  // exact value of the machine's full output stream
};

/// Per-n verdicts for "does this machine compute the generator's number":
/// the machine's exact output value (finite outputs summed, periodic
/// outputs in closed form) must lie within base^-n of the number.  The
/// number itself is read from the generator at n+guard digits and the
/// comparison window widened by base^-(n+guard), all arithmetic exact.
/// Both the generator's value and the machine's output are interpreted in
/// [0,1) (integer parts dropped).
struct CheckReport {
  std::vector<CheckEntry> entries;
  bool all_pass = true;
  std::size_t first_failure = 0;  // 0 when every n passed
};

CheckReport check_computes(const AdvicedDFA& dfa, const DigitGenerator& g, std::size_t n_max,
                           std::size_t guard = 24);

/// Machine that ignores both tapes and emits the given digits cyclically
/// forever, one state per digit.
AdvicedDFA make_digit_cycler(const std::string& digits);

/// Two-state, empty-advice machine whose output stream is 011(01)^... in
/// base 2, the expansion of 5/12; the advice head's resting position
/// doubles as one bit of memory.
AdvicedDFA make_five_twelfths_machine();

/// Uniformly random machine with up to max_states states, binary alphabet,
/// and a random default advice of length at most max_advice.
AdvicedDFA random_machine(std::mt19937_64& rng, std::size_t max_states, std::size_t max_advice);

struct SearchResult {
  bool found = false;
  AdvicedDFA machine;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

/// Depth-first search over every two-state binary machine with empty
/// advice, assigning transition entries only when the simulation first
/// consults them and pruning any assignment whose value check already
/// fails.  Returns the first machine passing check_computes up to n_max,
/// if one is reached within the node budget.
SearchResult search_two_state_family(const DigitGenerator& g, std::size_t n_max,
                                     std::uint64_t node_budget, std::size_t guard = 24);

}  // namespace realspace

#endif
