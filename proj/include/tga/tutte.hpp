#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tga/numeric.hpp"
#include "tga/polynomial.hpp"

namespace tga {

// y^loop_exponent * prod over (m, mult) of (y + x + ... + x^(m-1))^mult.
// Entries with zero multiplicity are never stored.
struct FactoredTutte {
  BigInt loop_exponent = 0;
  std::map<std::uint64_t, BigInt> cycle_factors;

  void add_cycles(std::uint64_t length, const BigInt& multiplicity);

  // "y^6(y+x)^2(y+x+x^2+x^3)^2".
  std::string to_string() const;
  // Refuses (GraphTooLarge) when the total degree would exceed max_degree.
  BivariatePolynomial expand(std::uint64_t max_degree = 4096) const;

  friend bool operator==(const FactoredTutte&, const FactoredTutte&) = default;
};

// Tutte polynomial of a cycle of length m: y + x + ... + x^(m-1).
BivariatePolynomial cycle_tutte(std::uint64_t length);

// Exact value at (x, y); ValueTooLarge when an intermediate power would
// exceed bit_budget bits.
Rational tutte_evaluate(const FactoredTutte& tutte, const Rational& x, const Rational& y,
                        std::uint64_t bit_budget = kDefaultBitBudget);

}  // namespace tga
