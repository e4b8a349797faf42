#ifndef BICROSS_ERRORS_HPP
#define BICROSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bicross {

// Misuse of the library (wrong presentation, unknown generator, bad input
// file). Mathematical outcomes (failing axiom checks, obstructions) are
// never exceptions; they travel as report values.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing truncation orders, missing table entries, unverified maps.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed expressions, unknown generators, invalid relation shapes.
struct InputError : Error {
  using Error::Error;
};

// Division by a series with vanishing constant term.
struct NotInvertible : Error {
  explicit NotInvertible(const std::string& what, int witness = 0)
      : Error(what), witness_index(witness) {}
  int witness_index;
};

// central_sqrt/central_invert argument whose h^0 part is not the unit.
struct NotASquareRoot : Error {
  using Error::Error;
};

// Rewriting exceeded the configured step budget.
struct ResourceError : Error {
  explicit ResourceError(const std::string& what, std::size_t steps = 0)
      : Error(what), steps_done(steps) {}
  std::size_t steps_done;
};

}  // namespace bicross

#endif
