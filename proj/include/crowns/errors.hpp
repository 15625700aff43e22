#pragma once

#include <stdexcept>
#include <string>

namespace crowns {

/// Invalid crown parameters, indices out of range, malformed gluing maps.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element that does not belong to the poset being queried.
class UnknownElementError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A relation that cannot be the strict part of a partial order.
class OrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or sweep ran past its configured work budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed-form and brute-force constructions disagree.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace crowns
