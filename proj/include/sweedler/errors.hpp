#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sweedler {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised by invert() on a non-invertible square map.
class Singular : public Error {
 public:
  explicit Singular(std::size_t rank)
      : Error("map is singular (rank " + std::to_string(rank) + ")"), rank_(rank) {}
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t rank_;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class InvalidBialgebra : public Error {
 public:
  using Error::Error;
};

class InvalidHopf : public Error {
 public:
  using Error::Error;
};

class NotAMorphism : public Error {
 public:
  using Error::Error;
};

class NotAComodule : public Error {
 public:
  using Error::Error;
};

class NotCommutative : public Error {
 public:
  using Error::Error;
};

class IncompatibleMeasurings : public Error {
 public:
  using Error::Error;
};

/// The quotient defining a generated subcoalgebra failed to carry the induced
/// structure. With valid inputs this cannot happen.
class InducedStructureIllDefined : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class NegativeDegree : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would visit more candidates than allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("search space of " +
              (required == UINT64_MAX ? std::string(">= 2^64") : std::to_string(required)) +
              " candidates exceeds budget " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Default bound on the number of candidates an exhaustive search may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

}  // namespace sweedler
