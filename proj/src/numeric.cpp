#include "planar/numeric.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace planar {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PLANAR_COUNT_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt falling_factorial(unsigned a, unsigned b) {
  if (b > a) return 0;
  BigInt out = 1;
  for (unsigned i = 0; i < b; ++i) out *= a - i;
  return out;
}

Rational falling_factorial(const Rational& a, unsigned b) {
  Rational out = 1;
  for (unsigned i = 0; i < b; ++i) out *= a - i;
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  // parity via cycle decomposition
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace planar
