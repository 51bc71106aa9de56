#include "tga/tutte.hpp"

#include <sstream>

#include "tga/errors.hpp"

namespace tga {

void FactoredTutte::add_cycles(std::uint64_t length, const BigInt& multiplicity) {
  if (multiplicity == 0) return;
  if (length == 1) {
    loop_exponent += multiplicity;
    return;
  }
  cycle_factors[length] += multiplicity;
}

std::string FactoredTutte::to_string() const {
  std::ostringstream out;
  if (loop_exponent != 0) {
    out << 'y';
    if (loop_exponent != 1) out << '^' << loop_exponent.str();
  }
  for (const auto& [length, multiplicity] : cycle_factors) {
    out << "(y";
    for (std::uint64_t j = 1; j < length; ++j) {
      out << "+x";
      if (j > 1) out << '^' << j;
      if (j == 3 && length > 6) {
        out << "+...+x^" << length - 1;
        break;
      }
    }
    out << ')';
    if (multiplicity != 1) out << '^' << multiplicity.str();
  }
  const auto text = out.str();
  return text.empty() ? "1" : text;
}

BivariatePolynomial cycle_tutte(std::uint64_t length) {
  BivariatePolynomial p = BivariatePolynomial::y();
  BivariatePolynomial power = BivariatePolynomial::constant(1);
  for (std::uint64_t j = 1; j < length; ++j) {
    power *= BivariatePolynomial::x();
    p += power;
  }
  return p;
}

BivariatePolynomial FactoredTutte::expand(std::uint64_t max_degree) const {
  BigInt degree = loop_exponent;
  for (const auto& [length, multiplicity] : cycle_factors) {
    degree += BigInt(length - 1) * multiplicity;
  }
  if (degree > max_degree) {
    throw GraphTooLarge("Tutte polynomial of degree " + degree.str() + " is too large to expand");
  }
  BivariatePolynomial result = BivariatePolynomial::y().pow(loop_exponent.convert_to<std::uint64_t>());
  for (const auto& [length, multiplicity] : cycle_factors) {
    result *= cycle_tutte(length).pow(multiplicity.convert_to<std::uint64_t>());
  }
  return result;
}

Rational tutte_evaluate(const FactoredTutte& tutte, const Rational& x, const Rational& y,
                        std::uint64_t bit_budget) {
  Rational value = checked_pow(y, tutte.loop_exponent, bit_budget);
  if (value == 0) return 0;
  for (const auto& [length, multiplicity] : tutte.cycle_factors) {
    // y + x + ... + x^(m-1)
    Rational base;
    if (x == 1) {
      base = y + Rational(length - 1);
    } else {
      base = y + (checked_pow(x, BigInt(length), bit_budget) - x) / (x - 1);
    }
    value *= checked_pow(base, multiplicity, bit_budget);
    if (value == 0) return 0;
    const auto bits = std::max(bit_length(numerator(value)), bit_length(denominator(value)));
    if (bits > bit_budget) {
      throw ValueTooLarge("Tutte evaluation exceeds the bit budget of " +
                          std::to_string(bit_budget));
    }
  }
  return value;
}

}  // namespace tga
