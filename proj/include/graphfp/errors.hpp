#pragma once

#include <stdexcept>
#include <string>

namespace graphfp {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, unknown ids, inadmissible words, schema or
// precondition violations. The CLI maps this to exit code 2.
struct ValidationError : Error {
  using Error::Error;
};

// A complexity guard refused the computation (partition order above the
// configured bound, Fock dimension cap, term-count cap). CLI exit code 3.
struct ResourceGuardError : Error {
  using Error::Error;
};

}  // namespace graphfp
