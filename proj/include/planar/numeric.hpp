#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace planar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an input violates a documented invariant or precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration or DP exceeds its configured resource cap.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Default item cap for enumerations. PLANAR_COUNT_BUDGET overrides it.
std::uint64_t default_budget();

/// Counts emitted items against a cap and throws BudgetExceeded past it.
class BudgetMeter {
 public:
  explicit BudgetMeter(std::uint64_t cap = default_budget()) : cap_(cap) {}

  void charge(std::uint64_t items = 1) {
    used_ += items;
    if (used_ > cap_) {
      throw BudgetExceeded("enumeration budget of " + std::to_string(cap_) +
                           " items exceeded");
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// a(a-1)...(a-b+1); zero when b > a.
BigInt falling_factorial(unsigned a, unsigned b);

/// Falling factorial with a rational base; (a)_0 = 1.
Rational falling_factorial(const Rational& a, unsigned b);

/// Sign of a permutation given in 0-based one-line notation.
int permutation_sign(const std::vector<int>& perm);

std::string to_string(const BigInt& v);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& v);

}  // namespace planar
