#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlite {

/// Raised when a scalar argument falls outside the domain of an operation
/// (a probability outside [0,1], m < 2, x < c, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a probability vector does not form a valid distribution.
class InvalidDistribution : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two distributions that must share a support do not.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for a malformed composite specification (subsystems, conditionals).
class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Signals a broken numerical invariant inside the library, never a caller error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Entries of a distribution must sum to 1 within this tolerance.
inline constexpr double kSumTolerance = 1e-9;

/// A probability in [0,1]. Converts implicitly from double and validates on
/// the way in, so `dl_pair(0.5, 1.0)` reads naturally at call sites.
class Probability {
 public:
  constexpr Probability() noexcept = default;
  Probability(double value);  // NOLINT(google-explicit-constructor)

  constexpr double value() const noexcept { return value_; }
  constexpr operator double() const noexcept { return value_; }  // NOLINT

 private:
  double value_ = 0.0;
};

/// An immutable discrete probability distribution over `dim()` mutually
/// exclusive inferences. Construction validates every entry and the sum;
/// inputs are never renormalized.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<double> probs);
  DiscreteDistribution(std::initializer_list<double> probs);

  /// Uniform distribution over m inferences.
  static DiscreteDistribution equiprobable(std::size_t m);
  /// All mass on inference `index` of m.
  static DiscreteDistribution certainty(std::size_t m, std::size_t index = 0);

  std::size_t dim() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }

  auto begin() const noexcept { return probs_.cbegin(); }
  auto end() const noexcept { return probs_.cend(); }

  friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

 private:
  std::vector<double> probs_;
};

/// Throws DimensionMismatch unless both distributions have the same dimension.
void require_same_dim(const DiscreteDistribution& p, const DiscreteDistribution& q);

std::string to_string(const DiscreteDistribution& dist);

}  // namespace dlite
