#ifndef REALSPACE_ERRORS_HPP
#define REALSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace realspace {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A tape head was asked to move left of cell 0.
class MoveLeftOfOrigin : public Error {
public:
  MoveLeftOfOrigin() : Error("tape head moved left of origin") {}
};

/// Two fixed-point numbers with different bases were compared.
class BaseMismatch : public Error {
public:
  explicit BaseMismatch(const std::string& what) : Error(what) {}
};

/// Text did not parse as a fixed-point numeral in the declared base.
class MalformedNumeral : public Error {
public:
  explicit MalformedNumeral(const std::string& what) : Error(what) {}
};

/// An algebraic number description whose seed does not bracket a root.
class SeedInvalid : public Error {
public:
  explicit SeedInvalid(const std::string& what) : Error(what) {}
};

/// An exponent table that is not strictly increasing.
class NotIncreasing : public Error {
public:
  explicit NotIncreasing(const std::string& what) : Error(what) {}
};

/// A natural number that does not decode to a valid (n, i, b) triple.
class InvalidTriple : public Error {
public:
  explicit InvalidTriple(const std::string& what) : Error(what) {}
};

/// A membership oracle answered in a way no single number can explain.
class InconsistentOracle : public Error {
public:
  explicit InconsistentOracle(const std::string& what) : Error(what) {}
};

/// An advice-taking automaton was run at a length it has no advice for.
class AdviceMissing : public Error {
public:
  explicit AdviceMissing(const std::string& what) : Error(what) {}
};

/// A periodicity witness that does not describe an infinite periodic output.
class NotPeriodic : public Error {
public:
  explicit NotPeriodic(const std::string& what) : Error(what) {}
};

/// Too few or too narrow profiling samples to classify growth.
class InsufficientSamples : public Error {
public:
  explicit InsufficientSamples(const std::string& what) : Error(what) {}
};

/// Integer or rational division by zero.
class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero") {}
};

/// A JSON description file that does not match its schema.
class SpecLoadError : public Error {
public:
  explicit SpecLoadError(const std::string& what) : Error(what) {}
};

}  // namespace realspace

#endif
