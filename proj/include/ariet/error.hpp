#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ariet {

// Base of every error raised by the library for mathematically invalid
// input (the CLI maps these to exit code 1). `kind()` is a stable tag.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// The renormalization leaves the gasket: a - b - c <= 0 or ties with b or c.
class NotInGasket : public DomainError {
 public:
  NotInGasket(std::size_t at_step, const std::string& reason)
      : DomainError("NotInGasket", reason + " at step " + std::to_string(at_step)),
        at_step_(at_step),
        reason_(reason) {}
  std::size_t at_step() const noexcept { return at_step_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t at_step_;
  std::string reason_;
};

class Inadmissible : public DomainError {
 public:
  explicit Inadmissible(const std::string& message) : DomainError("Inadmissible", message) {}
};

class InvalidSeed : public DomainError {
 public:
  explicit InvalidSeed(const std::string& message) : DomainError("InvalidSeed", message) {}
};

class IncompletePrefix : public DomainError {
 public:
  explicit IncompletePrefix(const std::string& message)
      : DomainError("IncompletePrefix", message) {}
};

class Overflow : public DomainError {
 public:
  explicit Overflow(const std::string& message) : DomainError("Overflow", message) {}
};

class OutOfDomain : public DomainError {
 public:
  explicit OutOfDomain(const std::string& message) : DomainError("OutOfDomain", message) {}
};

class NotAFactor : public DomainError {
 public:
  explicit NotAFactor(const std::string& message) : DomainError("NotAFactor", message) {}
};

class ReturnTimeCapExceeded : public DomainError {
 public:
  explicit ReturnTimeCapExceeded(const std::string& message)
      : DomainError("ReturnTimeCapExceeded", message) {}
};

// Raised when a computed object contradicts the structure it must have
// (an interval straddling a piece boundary mid-flight, an induced map that
// is not an AR9 exchange). Never expected for valid input.
class StructureViolation : public DomainError {
 public:
  explicit StructureViolation(const std::string& message)
      : DomainError("StructureViolation", message) {}
};

// Malformed textual input (numbers, prefixes, words, config lines).
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& message) : std::invalid_argument(message) {}
};

}  // namespace ariet
