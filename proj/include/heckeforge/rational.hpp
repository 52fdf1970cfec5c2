#ifndef HECKEFORGE_RATIONAL_HPP
#define HECKEFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heckeforge {

// Exact rational scalar. Canonical form (gcd 1, positive denominator) is
// maintained by GMP on construction and after every operation.
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}
  BigRational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("BigRational: zero denominator");
    v_.canonicalize();
  }
  explicit BigRational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit BigRational(const mpz_class& n) : v_(n) {}
  BigRational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::domain_error("BigRational: zero denominator");
    v_.canonicalize();
  }

  static BigRational from_string(const std::string& s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  BigRational operator-() const { return BigRational(mpq_class(-v_)); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }

  BigRational pow(long e) const;
  BigRational inverse() const;
  double to_double() const { return v_.get_d(); }

  // Decimal "n" or "n/d".
  std::string str() const;

private:
  mpq_class v_;
};

}  // namespace heckeforge

#endif
