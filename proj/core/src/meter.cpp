#include "realspace/meter.hpp"

#include <ostream>
#include <stdexcept>

namespace realspace {

void SpaceMeter::charge(int tape_id, TapeRole role, std::uint64_t cells) {
  if (cells == 0 || !counts(role)) return;
  current_ += cells;
  if (current_ > peak_) peak_ = current_;
  if (trace_enabled_)
    trace_.push_back({next_step(), tape_id, static_cast<std::int64_t>(cells), peak_});
}

void SpaceMeter::release(int tape_id, TapeRole role, std::uint64_t cells) {
  if (cells == 0 || !counts(role)) return;
  current_ -= cells;
  if (trace_enabled_)
    trace_.push_back({next_step(), tape_id, -static_cast<std::int64_t>(cells), peak_});
}

void SpaceMeter::write_trace_csv(std::ostream& os) const {
  os << "step,tape,charged,peak\n";
  for (const auto& e : trace_)
    os << e.step << ',' << e.tape << ',' << e.charged << ',' << e.peak << '\n';
}

MeteredTape::MeteredTape(SpaceMeter& meter, Alphabet alphabet, TapeRole role)
    : meter_(&meter), alphabet_(alphabet), role_(role), id_(meter.register_tape()) {}

MeteredTape::~MeteredTape() {
  meter_->release(id_, role_, touched_);
}

void MeteredTape::touch(std::size_t pos) {
  if (pos >= touched_) {
    meter_->charge(id_, role_, pos + 1 - touched_);
    touched_ = pos + 1;
  }
  if (pos >= cells_.size()) cells_.resize(pos + 1, kBlank);
}

Symbol MeteredTape::step(Symbol write, Move move) {
  if (!alphabet_.contains(write))
    throw std::invalid_argument("symbol outside tape alphabet");
  touch(head_);
  cells_[head_] = write;
  switch (move) {
    case Move::Left:
      if (head_ == 0) throw MoveLeftOfOrigin();
      --head_;
      break;
    case Move::Right:
      ++head_;
      break;
    case Move::Stay:
      break;
  }
  touch(head_);
  return cells_[head_];
}

Symbol MeteredTape::read() const {
  return head_ < cells_.size() ? cells_[head_] : kBlank;
}

MeteredInt::MeteredInt(SpaceMeter& meter, TapeRole role)
    : meter_(&meter), role_(role), id_(meter.register_tape()) {}

MeteredInt::MeteredInt(SpaceMeter& meter, std::uint64_t v, TapeRole role)
    : MeteredInt(meter, role) {
  set_u64(v);
}

MeteredInt::~MeteredInt() {
  meter_->release(id_, role_, high_water_);
}

void MeteredInt::settle() {
  std::size_t len = value_.bit_length();
  if (len > high_water_) {
    meter_->charge(id_, role_, len - high_water_);
    high_water_ = len;
  }
}

void MeteredInt::set_zero() {
  value_ = BigUint();
}

void MeteredInt::set_u64(std::uint64_t v) {
  value_ = BigUint(v);
  settle();
}

void MeteredInt::set_value(const BigUint& v) {
  value_ = v;
  settle();
}

void MeteredInt::set_copy(const MeteredInt& o) {
  value_ = o.value_;
  settle();
}

void MeteredInt::increment() {
  value_.add_u64(1);
  settle();
}

void MeteredInt::decrement() {
  if (value_.is_zero()) throw Error("decrement of zero");
  value_.sub(BigUint(1));
}

void MeteredInt::add(const MeteredInt& o) {
  value_.add(o.value_);
  settle();
}

void MeteredInt::add_const(std::uint64_t v) {
  value_.add_u64(v);
  settle();
}

void MeteredInt::sub(const MeteredInt& o) {
  value_.sub(o.value_);
}

void MeteredInt::assign_product(const MeteredInt& a, const MeteredInt& b) {
  value_ = BigUint::mul(a.value_, b.value_);
  settle();
}

void MeteredInt::mul_const(std::uint64_t v) {
  value_.mul_u64(v);
  settle();
}

void MeteredInt::shl(std::size_t bits) {
  value_.shl(bits);
  settle();
}

void MeteredInt::shr_one() {
  value_.shr(1);
}

void DirectUnaryInput::move(Move m) {
  switch (m) {
    case Move::Left:
      if (head_ == 0) throw MoveLeftOfOrigin();
      --head_;
      break;
    case Move::Right:
      ++head_;
      break;
    case Move::Stay:
      break;
  }
}

FakeUnaryInput::FakeUnaryInput(SpaceMeter& meter, std::size_t n)
    : pos_(meter, TapeRole::Work), bound_(meter, TapeRole::Input) {
  bound_.set_u64(n);
}

Symbol FakeUnaryInput::read() const {
  return pos_.cmp(bound_) < 0 ? Symbol{0} : kBlank;
}

void FakeUnaryInput::move(Move m) {
  switch (m) {
    case Move::Left:
      if (pos_.is_zero()) throw MoveLeftOfOrigin();
      pos_.decrement();
      break;
    case Move::Right:
      pos_.increment();
      break;
    case Move::Stay:
      break;
  }
}

}  // namespace realspace
