#pragma once

#include <stdexcept>

namespace crossring {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller broke a documented contract (mixed moduli, out-of-range index, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// Input file or string is structurally malformed.
struct ParseError : Error {
  using Error::Error;
};

// Drawing data is well-formed but mutually inconsistent.
struct ValidationError : Error {
  using Error::Error;
};

// A certified invariant failed on a concrete drawing.
struct FalsificationError : Error {
  using Error::Error;
};

// A search or enumeration exceeded its configured budget.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace crossring
