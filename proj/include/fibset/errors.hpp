#pragma once

#include <stdexcept>
#include <string>

namespace fibset {

// Precondition violated by the caller (bad n, rank out of range, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Membership query above what a SumSequence was generated for.
struct BoundError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

// Instance too large to materialize.
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// Two computation routes disagreed; always a bug.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fibset
