#ifndef HECKEFORGE_LAURENT_HPP
#define HECKEFORGE_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "heckeforge/rational.hpp"

namespace heckeforge {

// Sparse multivariate Laurent polynomial over Q. The variable list is fixed
// per ring instance ("v" first by convention, then z1..zm); exponent vectors
// all share that arity and may be negative. Terms are kept in lexicographic
// exponent order, which fixes the serialization order. Zero coefficients are
// never stored.
class LaurentPoly {
public:
  using Exps = std::vector<int>;
  using TermMap = std::map<Exps, BigRational>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(std::vector<std::string> vars, const BigRational& c);
  static LaurentPoly variable(std::vector<std::string> vars, int idx, int exp = 1);
  static LaurentPoly monomial(std::vector<std::string> vars, Exps e, const BigRational& c);

  const std::vector<std::string>& vars() const { return vars_; }
  int arity() const { return static_cast<int>(vars_.size()); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  BigRational constant_value() const;  // requires is_constant()
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exps& e, const BigRational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }
  LaurentPoly scaled(const BigRational& c) const;
  LaurentPoly pow(unsigned e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  bool operator<(const LaurentPoly& o) const;  // arbitrary total order for maps

  int var_index(const std::string& name) const;  // -1 if absent

  // Degree range in one variable; nullopt on the zero polynomial.
  std::optional<int> min_deg(int var) const;
  std::optional<int> max_deg(int var) const;

  // Coefficient of var^k, returned in the same ring with that exponent zeroed.
  LaurentPoly coeff_of(int var, int k) const;

  // Multiply by var^k.
  LaurentPoly shifted(int var, int k) const;

  // Substitute values for a subset of variables (rational points, nonzero
  // required when negative exponents occur). Result stays in the same ring
  // with the bound variables eliminated from all exponents.
  LaurentPoly substituted(const std::map<int, BigRational>& bindings) const;

  // True if the variable occurs with nonzero exponent in some term.
  bool uses_var(int var) const;
  // Indices of variables actually occurring.
  std::vector<int> active_vars() const;

  double eval_double(const std::vector<double>& point) const;

  // Divides every coefficient by the gcd of numerators over lcm of
  // denominators and pulls out a common monomial; returns the removed factor
  // so that *this(old) == removed * *this(new). Sign convention: leading
  // (lex-largest) coefficient positive.
  std::pair<BigRational, Exps> strip_content();

  // Exact division check: returns quotient if o divides this exactly with a
  // single active variable (univariate path); used by gcd reduction.
  static LaurentPoly gcd_univariate(const LaurentPoly& a, const LaurentPoly& b, int var);
  static bool divmod_univariate(const LaurentPoly& a, const LaurentPoly& b, int var,
                                LaurentPoly& quot);

  std::string str() const;

private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

}  // namespace heckeforge

#endif
