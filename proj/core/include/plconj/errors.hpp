// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace plconj {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A coordinate outside [0,1], or a value outside a function's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Composition produced more linear pieces than the caller allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t pieces, std::size_t budget, const std::string& what = "pieces")
      : Error("budget exceeded: " + std::to_string(pieces) + " " + what + " > " +
              std::to_string(budget)),
        pieces_(pieces),
        budget_(budget) {}

  std::size_t pieces() const noexcept { return pieces_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t pieces_;
  std::size_t budget_;
};

/// The input map does not have the shape an operation requires
/// (not unimodal, not monotone, ...).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its contract, e.g. on a truncated closure.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace plconj
