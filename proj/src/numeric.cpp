#include "tga/numeric.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tga/errors.hpp"

namespace tga {

BigInt pow_int(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt square = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

Rational pow_rational(const Rational& base, std::int64_t exponent) {
  if (exponent >= 0) {
    BigInt num = pow_int(numerator(base), static_cast<std::uint64_t>(exponent));
    BigInt den = pow_int(denominator(base), static_cast<std::uint64_t>(exponent));
    return Rational(num, den);
  }
  if (base == 0) throw InvalidRange("zero raised to a negative power");
  const auto positive = static_cast<std::uint64_t>(-exponent);
  return Rational(pow_int(denominator(base), positive),
                  pow_int(numerator(base), positive));
}

BigInt require_integer(const Rational& q, const std::string& what) {
  if (denominator(q) != 1) {
    throw NonIntegerResult(what + " is not an integer: " + to_string(q));
  }
  return numerator(q);
}

std::uint64_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return boost::multiprecision::msb(abs(value)) + 1;
}

std::uint64_t checked_exponent(const BigInt& exponent, std::uint64_t bit_budget) {
  if (exponent < 0) throw InvalidRange("negative exponent " + to_string(exponent));
  if (exponent > bit_budget) {
    throw ValueTooLarge("exponent " + to_string(exponent) + " exceeds the bit budget of " +
                        std::to_string(bit_budget));
  }
  return exponent.convert_to<std::uint64_t>();
}

Rational checked_pow(const Rational& base, const BigInt& exponent,
                     std::uint64_t bit_budget) {
  if (exponent < 0) throw InvalidRange("negative exponent " + to_string(exponent));
  if (exponent == 0) return 1;
  if (base == 0 || base == 1) return base;
  if (base == -1) return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
  const std::uint64_t per_step =
      std::max(bit_length(numerator(base)), bit_length(denominator(base)));
  if (exponent > bit_budget || exponent * per_step > BigInt(bit_budget)) {
    throw ValueTooLarge(to_string(base) + "^" + to_string(exponent) +
                        " exceeds the bit budget of " + std::to_string(bit_budget));
  }
  return pow_rational(base, exponent.convert_to<std::int64_t>());
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

PowerProduct PowerProduct::zero() { return PowerProduct{{{BigInt(0), BigInt(1)}}}; }

PowerProduct PowerProduct::power(BigInt base, BigInt exponent) {
  return PowerProduct{{{std::move(base), std::move(exponent)}}};
}

bool PowerProduct::is_zero() const {
  for (const auto& [base, exponent] : factors) {
    if (base == 0 && exponent > 0) return true;
  }
  return false;
}

std::uint64_t PowerProduct::estimated_bits() const {
  if (is_zero()) return 0;
  BigInt bits = 1;
  for (const auto& [base, exponent] : factors) bits += BigInt(bit_length(base)) * exponent;
  if (bits > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return bits.convert_to<std::uint64_t>();
}

BigInt PowerProduct::value(std::uint64_t bit_budget) const {
  if (is_zero()) return 0;
  if (estimated_bits() > bit_budget) {
    throw ValueTooLarge(to_string() + " exceeds the bit budget of " +
                        std::to_string(bit_budget));
  }
  BigInt result = 1;
  for (const auto& [base, exponent] : factors) {
    result *= pow_int(base, exponent.convert_to<std::uint64_t>());
  }
  return result;
}

std::string PowerProduct::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [base, exponent] : factors) {
    if (exponent == 0) continue;
    if (!first) out << '*';
    first = false;
    out << base.str();
    if (exponent != 1) out << '^' << exponent.str();
  }
  if (first) return "1";
  return out.str();
}

}  // namespace tga
