#ifndef HECKEFORGE_RATFRAC_HPP
#define HECKEFORGE_RATFRAC_HPP

#include <map>
#include <string>
#include <vector>

#include "heckeforge/laurent.hpp"

namespace heckeforge {

// Rational function num/den in the ring of LaurentPoly. Representatives are
// not required to be reduced; equality is cross-multiplication. A cheap
// normalization (content stripping plus univariate gcd when at most one
// variable is active) keeps intermediate sizes under control.
class RatFrac {
public:
  RatFrac() = default;
  explicit RatFrac(LaurentPoly n);
  RatFrac(LaurentPoly n, LaurentPoly d);

  static RatFrac constant(std::vector<std::string> vars, const BigRational& c);
  static RatFrac variable(std::vector<std::string> vars, int idx, int exp = 1);
  static RatFrac zero(std::vector<std::string> vars);
  static RatFrac one(std::vector<std::string> vars);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const std::vector<std::string>& vars() const { return num_.vars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const;
  BigRational constant_value() const;

  RatFrac operator-() const;
  friend RatFrac operator+(const RatFrac& a, const RatFrac& b);
  friend RatFrac operator-(const RatFrac& a, const RatFrac& b);
  friend RatFrac operator*(const RatFrac& a, const RatFrac& b);
  friend RatFrac operator/(const RatFrac& a, const RatFrac& b);
  RatFrac& operator+=(const RatFrac& o) { *this = *this + o; return *this; }
  RatFrac& operator-=(const RatFrac& o) { *this = *this - o; return *this; }
  RatFrac& operator*=(const RatFrac& o) { *this = *this * o; return *this; }
  RatFrac& operator/=(const RatFrac& o) { *this = *this / o; return *this; }

  RatFrac inverse() const;
  RatFrac pow(long e) const;

  // Cross-multiplication equality.
  friend bool operator==(const RatFrac& a, const RatFrac& b);
  friend bool operator!=(const RatFrac& a, const RatFrac& b) { return !(a == b); }

  RatFrac specialized(const std::map<int, BigRational>& bindings) const;
  RatFrac specialized_by_name(const std::map<std::string, BigRational>& bindings) const;

  // Re-express in a larger ring; every current variable must occur there.
  RatFrac promoted(const std::vector<std::string>& new_vars) const;

  double eval_double(const std::vector<double>& point) const;

  // Taylor coefficients c_0..c_order in the named variable; den must have
  // nonzero constant term in it after clearing the common monomial. A
  // genuine pole at var = 0 throws.
  std::vector<RatFrac> series(int var, int order) const;

  // Reduce the representative in place (content + univariate gcd).
  void normalize();
  std::string str() const;

private:
  LaurentPoly num_, den_;
};

// Rational-function reconstruction in the variable `var` from samples
// (point, value); values must not involve `var`. Degree bounds are on num and
// den. Throws std::runtime_error when no rational function within the bounds
// fits every sample.
RatFrac rf_reconstruct(int var, const std::vector<std::pair<BigRational, RatFrac>>& samples,
                       int deg_num, int deg_den);

}  // namespace heckeforge

#endif
