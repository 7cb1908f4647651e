#ifndef REALSPACE_BUILTINS_HPP
#define REALSPACE_BUILTINS_HPP

#include <memory>
#include <string>
#include <vector>

#include "realspace/generators.hpp"

namespace realspace {

/// Names accepted by make_builtin, in display order.
const std::vector<std::string>& builtin_names();

/// Construct a named built-in stream.  base_override 0 keeps the stream's
/// default base; an override the stream cannot honor (root refinements and
/// automata are tied to their radix) throws BaseMismatch.  Unknown names
/// throw Error.
std::unique_ptr<DigitGenerator> make_builtin(const std::string& name, int base_override = 0);

std::unique_ptr<DigitGenerator> make_rational_gen(const Rational& value, int base);

/// Load a generator description from a JSON file; the kind is inferred
/// from the fields present (coeffs: algebraic root, transitions:
/// automaton).  Throws SpecLoadError.
std::unique_ptr<DigitGenerator> load_generator_file(const std::string& path,
                                                    int base_override = 0);

/// Parity of one-bits (k=2, b=2).
AutomatonSpec thue_morse_spec();
/// Parity of trailing zero runs (k=2, b=2).
AutomatonSpec period_doubling_spec();

}  // namespace realspace

#endif
