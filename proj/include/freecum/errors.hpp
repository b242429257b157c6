#pragma once

#include <stdexcept>
#include <string>

namespace freecum {

/// Enumeration or verification requested beyond a configured ceiling.
class SizeLimitError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Argument outside the mathematical domain of an operation
/// (mismatched ground sets, crossing input, order violations, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A characteristic sequence or series is too short for the request.
class OrderError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Formal power series failures: composition, inversion, branch,
/// normalization and implicit-solver errors.
class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A moment or cumulant needed by a transform is not in the table.
class MissingDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual or JSON input. `where` is a JSON-pointer-like location.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what),
        where_(std::move(where)) {}

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace freecum
