#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "turan/errors.hpp"

namespace turan {

// Exact reduced fraction. All densities and exponents in the library are
// carried as Rationals; there is no floating point on any certified path.
struct Rational {
  long long num = 0;
  long long den = 1;  // > 0, gcd(|num|, den) == 1

  Rational() = default;
  Rational(long long n, long long d = 1) {
    if (d == 0) throw Error(ErrorKind::bad_fraction, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num = n / g;
    den = d / g;
  }

  friend Rational operator+(Rational a, Rational b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw Error(ErrorKind::bad_fraction, "division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }

  friend bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(Rational a, Rational b) { return !(a == b); }
  friend bool operator<(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(Rational a, Rational b) { return b < a; }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }
  friend bool operator>=(Rational a, Rational b) { return !(a < b); }

  double to_double() const { return static_cast<double>(num) / den; }

  // Always "num/den", lowest terms, including integers ("5/1").
  std::string str() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

// Accepts "a/b" or a bare integer "a".
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    long long n = std::stoll(text.substr(0, slash));
    long long d = std::stoll(text.substr(slash + 1));
    return Rational(n, d);
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw Error(ErrorKind::bad_fraction, "cannot parse '" + text + "'");
  }
}

}  // namespace turan
