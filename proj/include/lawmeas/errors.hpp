#ifndef LAWMEAS_ERRORS_HPP
#define LAWMEAS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lawmeas {

// Base class for everything the kernel can throw. The CLI maps these to
// exit code 2 (input/usage problems); verification *failures* are reported
// through result structs, never thrown.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two values over different carriers were combined.
struct CarrierMismatch : Error {
  using Error::Error;
};

// An enumeration would exceed a configured cap (see caps.hpp).
struct CapExceeded : Error {
  using Error::Error;
};

// A malformed file, unknown name, missing table, bad label, ...
struct InputError : Error {
  using Error::Error;
};

// Theory DSL parse failure. `kind` is one of "lexical", "unknown operation",
// "arity mismatch", "unbound variable". Positions are 1-based.
struct ParseError : Error {
  ParseError(std::string kind_, int line_, int column_, const std::string& detail)
      : Error(kind_ + " at " + std::to_string(line_) + ":" + std::to_string(column_) +
              ": " + detail),
        kind(std::move(kind_)),
        line(line_),
        column(column_) {}

  std::string kind;
  int line;
  int column;
};

// A caller violated a stated precondition of a checked lemma.
struct PreconditionError : Error {
  using Error::Error;
};

// A lifted operation produced a function outside the measurable-function
// space. This never happens for a genuine topological model; it signals a
// kernel bug or an unchecked input.
struct ClosureViolation : Error {
  using Error::Error;
};

// An empty target carrier cannot interpret arity-0 operations.
struct NoConstantsPossible : Error {
  using Error::Error;
};

}  // namespace lawmeas

#endif
