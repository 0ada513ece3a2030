#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace jfrac {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Exact rational number.
///
/// Invariants (enforced eagerly, on construction and after every
/// operation): gcd(numerator, denominator) == 1, denominator > 0, and
/// zero is stored as 0/1.  Two values are equal iff their canonical
/// representations are identical, so operator== is plain structural
/// comparison.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_negative() const { return sgn(v_) < 0; }
  /// True when the denominator is 1 (the value is an integer).
  bool is_integer() const { return v_.get_den() == 1; }

  /// The value as a BigInt; throws std::domain_error if not an integer.
  BigInt to_integer() const {
    if (!is_integer()) {
      throw std::domain_error("Rational: " + to_string() + " is not an integer");
    }
    return v_.get_num();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Canonical text form: "num/den", or just "num" when den == 1.
  std::string to_string() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class v_;
};

/// Exact binomial coefficient C(top, k) for integer top (possibly
/// negative, via the falling-factorial convention) and k >= 0:
/// C(top, k) = top (top-1) ... (top-k+1) / k!.  Returns 0 for k < 0.
inline Rational integer_binomial(const BigInt& top, long k) {
  if (k < 0) return Rational(0);
  BigInt num = 1, den = 1;
  for (long j = 0; j < k; ++j) {
    num *= top - j;
    den *= j + 1;
  }
  return Rational(num, den);
}

}  // namespace jfrac
