#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace togliatti {

/// Input validation failures. The kind is stable and shows up in CLI output.
enum class InputErrorKind {
  malformed,
  not_artinian,
  duplicate,
  inhomogeneous,
  invalid_argument,
};

std::string to_string(InputErrorKind kind);

class InputError : public std::invalid_argument {
 public:
  InputError(InputErrorKind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}
  InputErrorKind kind() const noexcept { return kind_; }

 private:
  InputErrorKind kind_;
};

/// An operation was called on an object that does not satisfy its precondition
/// (e.g. minimality of a non-Togliatti ideal).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force oracle refused to run because its size guard was exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::uint64_t needed, std::uint64_t budget)
      : std::runtime_error("enumeration needs " + std::to_string(needed) +
                           " raw subsets, budget is " + std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}
  std::uint64_t needed() const noexcept { return needed_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

}  // namespace togliatti
