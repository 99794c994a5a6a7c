#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace richness {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or invalid input data (maps to the CLI's parse exit code).
class InputError : public Error {
 public:
  using Error::Error;
};

class EmptySample : public InputError {
 public:
  EmptySample() : InputError("sample is empty") {}
};

class NonPositiveCount : public InputError {
 public:
  explicit NonPositiveCount(std::string label)
      : InputError("non-positive count for label '" + label + "'"), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class DuplicateLabel : public InputError {
 public:
  explicit DuplicateLabel(std::string label)
      : InputError("duplicate label '" + label + "'"), label_(std::move(label)) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::string reason)
      : InputError("line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Failures while computing an estimate (maps to the CLI's compute exit code).
class ComputeError : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

class NoFiniteSolution : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

class InvalidOrder : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

class BudgetExceeded : public ComputeError {
 public:
  BudgetExceeded(double combinations, std::uint64_t budget)
      : ComputeError("enumeration of " + std::to_string(combinations) +
                     " subsets exceeds budget " + std::to_string(budget) +
                     "; use the closed-form jackknife"),
        combinations_(combinations) {}
  double combinations() const noexcept { return combinations_; }

 private:
  double combinations_;
};

class InvalidProbability : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

class InfeasibleModel : public ComputeError {
 public:
  using ComputeError::ComputeError;
};

class SampleTooLarge : public ComputeError {
 public:
  SampleTooLarge(std::uint64_t requested, std::uint64_t available)
      : ComputeError("sample of " + std::to_string(requested) + " exceeds field of " +
                     std::to_string(available)) {}
};

}  // namespace richness
