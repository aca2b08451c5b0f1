#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cent2 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands from different base rings or quotient contexts were mixed.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input was violated (zero modulus,
/// non-divisibility in an exact division, non-prime characteristic, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit (or 128-bit cardinality) arithmetic would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its explicit budget. Oracles refuse rather
/// than truncate.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": requires " + std::to_string(required) + " but budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Malformed literal; `position` is a 0-based byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        message_(message),
        position_(position) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// Enumeration limits shared by every oracle.
struct Budget {
  std::uint64_t cap = 500'000'000;
  unsigned threads = 0;  // 0: std::thread::hardware_concurrency()
};

inline void require_budget(const char* what, std::uint64_t required, const Budget& budget) {
  if (required > budget.cap) throw BudgetError(what, required, budget.cap);
}

}  // namespace cent2
