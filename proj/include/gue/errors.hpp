#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gue {

/// Invalid argument to an operation (bad shape, n out of range, ...).
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the region where a formula is defined.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A rejection loop hit its proposal/attempt cap.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(const std::string& what, std::uint64_t attempts)
        : std::runtime_error(what), attempts_(attempts) {}

    std::uint64_t attempts() const noexcept { return attempts_; }

  private:
    std::uint64_t attempts_;
};

/// Numerical procedure failed to meet its tolerance.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A supplied oracle violated its contract (e.g. non-monotone CDF).
class OracleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace gue
