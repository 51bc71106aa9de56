#include "tga/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace tga {

BivariatePolynomial BivariatePolynomial::constant(BigInt c) {
  BivariatePolynomial p;
  p.add_term({0, 0}, c);
  return p;
}

BivariatePolynomial BivariatePolynomial::x() {
  BivariatePolynomial p;
  p.add_term({1, 0}, 1);
  return p;
}

BivariatePolynomial BivariatePolynomial::y() {
  BivariatePolynomial p;
  p.add_term({0, 1}, 1);
  return p;
}

BigInt BivariatePolynomial::coefficient(std::uint64_t deg_x, std::uint64_t deg_y) const {
  const auto it = terms_.find({deg_x, deg_y});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void BivariatePolynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial product;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      product.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    }
  }
  return product;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& other) {
  *this = *this * other;
  return *this;
}

BivariatePolynomial BivariatePolynomial::pow(std::uint64_t exponent) const {
  BivariatePolynomial result = constant(1);
  BivariatePolynomial square = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent > 0) square *= square;
  }
  return result;
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    total += Rational(c) * pow_rational(x, static_cast<std::int64_t>(e.first)) *
             pow_rational(y, static_cast<std::int64_t>(e.second));
  }
  return total;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, BigInt>> ordered(terms_.begin(), terms_.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto da = a.first.first + a.first.second;
    const auto db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool bare = e.first == 0 && e.second == 0;
    if (magnitude != 1 || bare) out << magnitude.str();
    auto var = [&](char name, std::uint64_t deg) {
      if (deg == 0) return;
      out << name;
      if (deg > 1) out << '^' << deg;
    };
    var('x', e.first);
    var('y', e.second);
  }
  return out.str();
}

}  // namespace tga
