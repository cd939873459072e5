// Exception types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace spinform {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched ranks between weights or between a weight and an algebra.
struct RankError : Error {
  using Error::Error;
};

// Input outside an operation's mathematical domain.
struct DomainError : Error {
  using Error::Error;
};

// Requested truncation depth exceeds what the operands guarantee.
struct TruncationError : Error {
  using Error::Error;
};

// Computation rejected by a resource guard (rank, depth or dimension).
struct ResourceError : Error {
  using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace spinform
