#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

// Bad user input: out-of-range weights, non-prime p, p | N and so on.
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Something that the theory guarantees did not happen. Always a bug or an
// unsupported regime, never a user error.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError(what);
}

}  // namespace verlinde
