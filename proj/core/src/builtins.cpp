#include "realspace/builtins.hpp"

#include <fstream>
#include <sstream>

#include "realspace/errors.hpp"

namespace realspace {

namespace {

AlgebraicSpec root_spec(std::vector<std::int64_t> coeffs) {
  AlgebraicSpec spec;
  spec.coeffs = std::move(coeffs);
  spec.seed = Dyadic::parse("1", 2);
  spec.k = 0;
  return spec;
}

int pick_base(int override_base, int fallback) { return override_base ? override_base : fallback; }

void require_fixed_base(int override_base, int fixed, const std::string& name) {
  if (override_base && override_base != fixed)
    throw BaseMismatch(name + " is a base-" + std::to_string(fixed) + " stream");
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "sqrt2", "golden", "cbrt2", "mu-square", "mu-cube", "liouville", "primes", "thue-morse"};
  return names;
}

AutomatonSpec thue_morse_spec() {
  AutomatonSpec spec;
  spec.k = 2;
  spec.b = 2;
  spec.states = {"even", "odd"};
  spec.start = 0;
  spec.transition = {{0, 1}, {1, 0}};
  spec.output = {0, 1};
  return spec;
}

AutomatonSpec period_doubling_spec() {
  // State meaning: leading zeros, then the parity of the current run of
  // trailing zeros; output 1 when that run has even length.
  AutomatonSpec spec;
  spec.k = 2;
  spec.b = 2;
  spec.states = {"lead", "run-even", "run-odd"};
  spec.start = 0;
  spec.transition = {{0, 1}, {2, 1}, {1, 1}};
  spec.output = {0, 1, 0};
  return spec;
}

std::unique_ptr<DigitGenerator> make_builtin(const std::string& name, int base_override) {
  if (name == "sqrt2") {
    require_fixed_base(base_override, 2, name);
    return std::make_unique<AlgebraicGen>(name, root_spec({-2, 0, 1}));
  }
  if (name == "golden") {
    require_fixed_base(base_override, 2, name);
    return std::make_unique<AlgebraicGen>(name, root_spec({-1, -1, 1}));
  }
  if (name == "cbrt2") {
    require_fixed_base(base_override, 2, name);
    return std::make_unique<AlgebraicGen>(name, root_spec({-2, 0, 0, 1}));
  }
  if (name == "mu-square")
    return std::make_unique<MuGen>(name, ExponentFunction::power_fn(2), pick_base(base_override, 10));
  if (name == "mu-cube")
    return std::make_unique<MuGen>(name, ExponentFunction::power_fn(3), pick_base(base_override, 10));
  if (name == "liouville")
    return std::make_unique<MuGen>(name, ExponentFunction::factorial(), pick_base(base_override, 10));
  if (name == "primes")
    return std::make_unique<IndicatorGen>(name, prime_member, pick_base(base_override, 10));
  if (name == "thue-morse") {
    require_fixed_base(base_override, 2, name);
    return std::make_unique<AutomaticGen>(name, thue_morse_spec());
  }
  throw Error("unknown builtin '" + name + "'");
}

std::unique_ptr<DigitGenerator> make_rational_gen(const Rational& value, int base) {
  return std::make_unique<RationalGen>(value, base);
}

std::unique_ptr<DigitGenerator> load_generator_file(const std::string& path, int base_override) {
  std::ifstream in(path);
  if (!in) throw SpecLoadError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (text.find("\"coeffs\"") != std::string::npos) {
    std::istringstream stream(text);
    AlgebraicSpec spec = load_algebraic_spec(stream);
    require_fixed_base(base_override, 2, path);
    return std::make_unique<AlgebraicGen>(path, std::move(spec));
  }
  if (text.find("\"transitions\"") != std::string::npos) {
    std::istringstream stream(text);
    AutomatonSpec spec = load_automaton_spec(stream);
    require_fixed_base(base_override, spec.b, path);
    return std::make_unique<AutomaticGen>(path, std::move(spec));
  }
  throw SpecLoadError("'" + path + "' describes neither an algebraic root nor an automaton");
}

}  // namespace realspace
