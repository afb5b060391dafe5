#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nestbraid {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad JSON, unsupported type, a
/// subspace that is not in the building set, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size limit would be exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& cap_name, std::size_t limit)
      : Error("cap '" + cap_name + "' exceeded (limit " +
              std::to_string(limit) + ")"),
        cap_name_(cap_name),
        limit_(limit) {}

  const std::string& cap_name() const { return cap_name_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
};

/// An internal consistency check failed (e.g. a minimum the theory says is
/// unique was not).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace nestbraid
