#pragma once

#include <stdexcept>
#include <string>

namespace semiramsey {

enum class ErrorKind {
  Argument,      // malformed or out-of-range input
  Precondition,  // input well-formed but violates an operation's hypothesis
  Degenerate,    // singular system, zero denominator, coincident vertices
  Resource,      // configured size cap exceeded
  Budget,        // search node budget exhausted
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct ArgumentError : Error {
  explicit ArgumentError(const std::string& what) : Error(ErrorKind::Argument, what) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};
struct DegeneracyError : Error {
  explicit DegeneracyError(const std::string& what) : Error(ErrorKind::Degenerate, what) {}
};
struct ResourceError : Error {
  explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};
struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error(ErrorKind::Budget, what) {}
};

/// Size caps shared by constructions and the CLI.
struct ResourceCaps {
  std::size_t max_points = std::size_t{1} << 20;
  std::size_t max_bits = 1'000'000;
};

}  // namespace semiramsey
