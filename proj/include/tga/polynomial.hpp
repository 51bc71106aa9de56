#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "tga/numeric.hpp"

namespace tga {

// Integer polynomial in x and y, sparse in (deg_x, deg_y).
class BivariatePolynomial {
 public:
  using Exponents = std::pair<std::uint64_t, std::uint64_t>;

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(BigInt c);
  static BivariatePolynomial x();
  static BivariatePolynomial y();

  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  BigInt coefficient(std::uint64_t deg_x, std::uint64_t deg_y) const;
  bool is_zero() const { return terms_.empty(); }

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  BivariatePolynomial& operator*=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);
  BivariatePolynomial pow(std::uint64_t exponent) const;

  Rational evaluate(const Rational& x, const Rational& y) const;
  // Terms by descending total degree, e.g. "x^3 + x^2 + x + y".
  std::string to_string() const;

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  void add_term(const Exponents& e, const BigInt& c);

  std::map<Exponents, BigInt> terms_;
};

}  // namespace tga
