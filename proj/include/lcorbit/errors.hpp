#pragma once

#include <stdexcept>

namespace lcorbit {

// Input that is well-formed but outside an operation's domain, such as a
// disconnected seed or a malformed graph6 string.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a hard size limit of an exact algorithm.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lcorbit
