#ifndef REALSPACE_METER_HPP
#define REALSPACE_METER_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "realspace/bigint.hpp"
#include "realspace/errors.hpp"

namespace realspace {

/// Which charges count toward the meter.  Defaults match machine-style space
/// accounting: work tapes only; input, output and oracle-query surfaces are
/// free.
struct MeterPolicy {
  bool count_input = false;
  bool count_output = false;
  bool count_query = false;
};

enum class TapeRole { Work, Input, Output, Query };

enum class Move { Left, Right, Stay };

/// Tape symbol; digits are non-negative, kBlank marks an unwritten cell.
using Symbol = std::int16_t;
inline constexpr Symbol kBlank = -1;

/// Symbol set {0..radix-1} plus the blank.
struct Alphabet {
  int radix = 2;
  bool contains(Symbol s) const { return s == kBlank || (s >= 0 && s < radix); }
};

struct TraceEvent {
  std::uint64_t step;
  int tape;
  std::int64_t charged;  // negative on release
  std::uint64_t peak;
};

/// Cell counter shared by all tapes of one computation.
///
/// current_cells is the number of live charged cells, peak_cells the
/// high-water mark.  A cell is charged the first time it is written or
/// visited and stays charged until its tape is destroyed; rewriting in
/// place never charges twice.
class SpaceMeter {
public:
  explicit SpaceMeter(MeterPolicy policy = {}) : policy_(policy) {}
  SpaceMeter(const SpaceMeter&) = delete;
  SpaceMeter& operator=(const SpaceMeter&) = delete;

  std::uint64_t current_cells() const { return current_; }
  std::uint64_t peak_cells() const { return peak_; }
  const MeterPolicy& policy() const { return policy_; }

  void enable_trace() { trace_enabled_ = true; }
  const std::vector<TraceEvent>& trace() const { return trace_; }
  /// Header "step,tape,charged,peak"; one row per charge/release event.
  void write_trace_csv(std::ostream& os) const;

  bool counts(TapeRole role) const {
    switch (role) {
      case TapeRole::Work: return true;
      case TapeRole::Input: return policy_.count_input;
      case TapeRole::Output: return policy_.count_output;
      case TapeRole::Query: return policy_.count_query;
    }
    return true;
  }

  int register_tape() { return next_tape_id_++; }
  std::uint64_t next_step() { return ++step_; }

  void charge(int tape_id, TapeRole role, std::uint64_t cells);
  void release(int tape_id, TapeRole role, std::uint64_t cells);

private:
  MeterPolicy policy_;
  std::uint64_t current_ = 0;
  std::uint64_t peak_ = 0;
  std::uint64_t step_ = 0;
  int next_tape_id_ = 0;
  bool trace_enabled_ = false;
  std::vector<TraceEvent> trace_;
};

/// One-dimensional tape with a head, charged cell by cell.
///
/// The head starts on cell 0; a fresh tape has no charged cells until the
/// first write or move.  Cells are charged once, on first touch, and
/// released when the tape is destroyed.
class MeteredTape {
public:
  MeteredTape(SpaceMeter& meter, Alphabet alphabet = {}, TapeRole role = TapeRole::Work);
  ~MeteredTape();
  MeteredTape(const MeteredTape&) = delete;
  MeteredTape& operator=(const MeteredTape&) = delete;

  /// Write under the head, move, return the symbol under the new position.
  Symbol step(Symbol write, Move move);
  /// Symbol under the head without touching the cell.
  Symbol read() const;
  std::size_t head() const { return head_; }
  /// Cells charged so far (the high-water extent of this tape).
  std::size_t touched() const { return touched_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int id() const { return id_; }

private:
  void touch(std::size_t pos);

  SpaceMeter* meter_;
  Alphabet alphabet_;
  TapeRole role_;
  int id_;
  std::vector<Symbol> cells_;
  std::size_t head_ = 0;
  std::size_t touched_ = 0;
};

/// Unbounded non-negative integer kept in binary on a metered work tape.
///
/// The charge of the tape is the high-water bit length of the value; loop
/// indices and head positions over it are free, just like tape heads.
/// Arithmetic is limb-based internally but every stored bit is charged.
class MeteredInt {
public:
  explicit MeteredInt(SpaceMeter& meter, TapeRole role = TapeRole::Work);
  MeteredInt(SpaceMeter& meter, std::uint64_t v, TapeRole role = TapeRole::Work);
  ~MeteredInt();
  MeteredInt(const MeteredInt&) = delete;
  MeteredInt& operator=(const MeteredInt&) = delete;

  void set_zero();
  void set_u64(std::uint64_t v);
  void set_value(const BigUint& v);
  void set_copy(const MeteredInt& o);

  void increment();
  /// Requires a positive value.
  void decrement();
  void add(const MeteredInt& o);
  void add_const(std::uint64_t v);
  /// Requires *this >= o.
  void sub(const MeteredInt& o);
  /// this = a * b.
  void assign_product(const MeteredInt& a, const MeteredInt& b);
  /// Multiply in place by a fixed machine constant (a base, never a value
  /// that grows with the input).
  void mul_const(std::uint64_t v);
  void shl(std::size_t bits);
  void shr_one();

  int cmp(const MeteredInt& o) const { return value_.compare(o.value_); }
  int cmp_const(std::uint64_t v) const { return value_.compare(BigUint(v)); }
  bool is_zero() const { return value_.is_zero(); }
  std::size_t bit_length() const { return value_.bit_length(); }
  bool bit(std::size_t i) const { return value_.bit(i); }

  const BigUint& value() const { return value_; }
  std::uint64_t to_u64() const { return value_.to_u64(); }
  std::size_t high_water_bits() const { return high_water_; }
  int id() const { return id_; }

private:
  void settle();

  SpaceMeter* meter_;
  TapeRole role_;
  int id_;
  BigUint value_;
  std::size_t high_water_ = 0;
};

/// Read-only unary input surface: cells 0..n-1 hold 0, the rest are blank.
class UnaryInput {
public:
  virtual ~UnaryInput() = default;
  virtual Symbol read() const = 0;
  virtual void move(Move m) = 0;
};

/// The input materialized as a real (uncharged) input tape; the head is an
/// ordinary head position.
class DirectUnaryInput final : public UnaryInput {
public:
  explicit DirectUnaryInput(std::size_t n) : n_(n) {}
  Symbol read() const override { return head_ < n_ ? Symbol{0} : kBlank; }
  void move(Move m) override;

private:
  std::size_t n_;
  std::size_t head_ = 0;
};

/// Unary input simulated from the binary value n: the head position is held
/// in binary on a charged work tape and compared against n on every read.
/// The bound itself is the simulating machine's input, so it is stored on an
/// input-role tape and is free under the default policy.  Extra charged
/// space over a direct run is the position counter: O(log n) cells.
class FakeUnaryInput final : public UnaryInput {
public:
  FakeUnaryInput(SpaceMeter& meter, std::size_t n);
  Symbol read() const override;
  void move(Move m) override;

private:
  MeteredInt pos_;
  MeteredInt bound_;
};

}  // namespace realspace

#endif
