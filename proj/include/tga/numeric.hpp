#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tga {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Expansions of counts and polynomial values are refused beyond this size.
inline constexpr std::uint64_t kDefaultBitBudget = std::uint64_t{1} << 20;

BigInt pow_int(const BigInt& base, std::uint64_t exponent);

// Negative exponents are allowed; base must then be nonzero.
Rational pow_rational(const Rational& base, std::int64_t exponent);

// Throws NonIntegerResult naming `what` when q has a nontrivial denominator.
BigInt require_integer(const Rational& q, const std::string& what);

std::uint64_t bit_length(const BigInt& value);

// Converts an exponent to a machine word, throwing ValueTooLarge when the
// expansion it controls could not fit in `bit_budget` bits anyway.
std::uint64_t checked_exponent(const BigInt& exponent, std::uint64_t bit_budget);

// base^exponent, refused with ValueTooLarge when the estimated size of the
// numerator or denominator exceeds bit_budget. 0, 1 and -1 are always cheap.
Rational checked_pow(const Rational& base, const BigInt& exponent,
                     std::uint64_t bit_budget);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

// value = prod base^exponent. Kept symbolic so astronomically large counts
// can be reported without expansion.
struct PowerProduct {
  std::vector<std::pair<BigInt, BigInt>> factors;

  static PowerProduct zero();
  static PowerProduct power(BigInt base, BigInt exponent);

  bool is_zero() const;
  // Upper bound on the bit length of value(), without expanding it.
  std::uint64_t estimated_bits() const;
  BigInt value(std::uint64_t bit_budget = kDefaultBitBudget) const;
  // "2^6", "0", "1" or products joined by '*'.
  std::string to_string() const;

  friend bool operator==(const PowerProduct&, const PowerProduct&) = default;
};

}  // namespace tga
