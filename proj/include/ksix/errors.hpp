#pragma once

#include <stdexcept>
#include <string>

namespace ksix {

// Bad input data: malformed matrices, ill-defined homomorphisms, non-exact
// sequences, parent mismatches. Maps to CLI exit code 3.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A postcondition the library itself guarantees failed to hold. Maps to CLI
// exit code 4 and should never fire on valid input.
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw validation_error(what);
}

inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

}  // namespace ksix
