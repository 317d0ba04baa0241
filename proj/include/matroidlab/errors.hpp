#pragma once

#include <stdexcept>
#include <string>

namespace matroidlab {

// Input set is not independent in the oracle the operation requires.
struct DependentInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotABase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Set touches elements removed from the ground set.
struct NotInGround : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotACalibratedColoop : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// F \ B leaves the symbolic set language.
struct IncomparableTails : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Query cannot be decided (e.g. generic finitarization on an infinite set).
struct Undecidable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WindowTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace matroidlab
