#ifndef BREGCHEB_ERRORS_HPP
#define BREGCHEB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bregcheb {

/// A point lies outside the domain an operation requires.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
  DomainError(const std::string& what, long index)
      : std::domain_error(what + " (point index " + std::to_string(index) + ")"),
        index_(index) {}

  /// Index of the offending point inside a set, or -1.
  long index() const noexcept { return index_; }

 private:
  long index_ = -1;
};

/// Structurally invalid input: dimension mismatch, bad matrix, bad parameter.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace bregcheb

#endif  // BREGCHEB_ERRORS_HPP
