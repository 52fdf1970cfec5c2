#include "heckeforge/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace heckeforge {

static void check_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("LaurentPoly: ring mismatch");
}

LaurentPoly LaurentPoly::constant(std::vector<std::string> vars, const BigRational& c) {
  LaurentPoly p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exps(p.arity(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(std::vector<std::string> vars, int idx, int exp) {
  LaurentPoly p(std::move(vars));
  if (idx < 0 || idx >= p.arity()) throw std::out_of_range("LaurentPoly: variable index");
  Exps e(p.arity(), 0);
  e[idx] = exp;
  p.terms_.emplace(std::move(e), BigRational(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<std::string> vars, Exps e, const BigRational& c) {
  LaurentPoly p(std::move(vars));
  if (static_cast<int>(e.size()) != p.arity())
    throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
  if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

BigRational LaurentPoly::constant_value() const {
  if (terms_.empty()) return BigRational(0);
  if (!is_constant()) throw std::logic_error("LaurentPoly: not constant");
  return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exps& e, const BigRational& c) {
  if (static_cast<int>(e.size()) != arity())
    throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_ring(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_ring(a, b);
  LaurentPoly r(a.vars_);
  LaurentPoly::Exps e(a.arity());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.arity(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const BigRational& c) const {
  LaurentPoly r(vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly r = constant(vars_, BigRational(1));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
  if (vars_ != o.vars_) return vars_ < o.vars_;
  auto it = terms_.begin(), jt = o.terms_.begin();
  for (; it != terms_.end() && jt != o.terms_.end(); ++it, ++jt) {
    if (it->first != jt->first) return it->first < jt->first;
    if (it->second != jt->second) return it->second < jt->second;
  }
  return jt != o.terms_.end();
}

int LaurentPoly::var_index(const std::string& name) const {
  for (int i = 0; i < arity(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

std::optional<int> LaurentPoly::min_deg(int var) const {
  std::optional<int> m;
  for (const auto& [e, c] : terms_)
    if (!m || e[var] < *m) m = e[var];
  return m;
}

std::optional<int> LaurentPoly::max_deg(int var) const {
  std::optional<int> m;
  for (const auto& [e, c] : terms_)
    if (!m || e[var] > *m) m = e[var];
  return m;
}

LaurentPoly LaurentPoly::coeff_of(int var, int k) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exps e0 = e;
    e0[var] = 0;
    r.terms_.emplace(std::move(e0), c);
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int var, int k) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exps e2 = e;
    e2[var] += k;
    r.terms_.emplace(std::move(e2), c);
  }
  return r;
}

LaurentPoly LaurentPoly::substituted(const std::map<int, BigRational>& bindings) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    BigRational coeff = c;
    Exps e2 = e;
    for (const auto& [idx, val] : bindings) {
      if (idx < 0 || idx >= arity()) throw std::out_of_range("substitute: variable index");
      int k = e[idx];
      if (k != 0) {
        if (val.is_zero() && k < 0)
          throw std::domain_error("substitute: zero at negative exponent");
        coeff *= val.pow(k);
      }
      e2[idx] = 0;
    }
    r.add_term(e2, coeff);
  }
  return r;
}

bool LaurentPoly::uses_var(int var) const {
  for (const auto& [e, c] : terms_)
    if (e[var] != 0) return true;
  return false;
}

std::vector<int> LaurentPoly::active_vars() const {
  std::vector<int> out;
  for (int i = 0; i < arity(); ++i)
    if (uses_var(i)) out.push_back(i);
  return out;
}

double LaurentPoly::eval_double(const std::vector<double>& point) const {
  if (static_cast<int>(point.size()) != arity())
    throw std::invalid_argument("eval_double: point arity");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (int i = 0; i < arity(); ++i)
      if (e[i] != 0) t *= std::pow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

std::pair<BigRational, LaurentPoly::Exps> LaurentPoly::strip_content() {
  Exps shift(arity(), 0);
  if (terms_.empty()) return {BigRational(1), shift};
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  }
  BigRational content(g, l);
  if (terms_.rbegin()->second.sign() < 0) content = -content;
  for (int i = 0; i < arity(); ++i) shift[i] = *min_deg(i);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exps e2 = e;
    for (int i = 0; i < arity(); ++i) e2[i] -= shift[i];
    out.emplace(std::move(e2), c / content);
  }
  terms_ = std::move(out);
  return {content, shift};
}

bool LaurentPoly::divmod_univariate(const LaurentPoly& a, const LaurentPoly& b, int var,
                                    LaurentPoly& quot) {
  // Plain polynomial division in `var` (exponents assumed nonnegative).
  LaurentPoly r = a;
  quot = LaurentPoly(a.vars());
  if (b.is_zero()) return false;
  int db = *b.max_deg(var);
  BigRational lb = b.coeff_of(var, db).constant_value();
  while (!r.is_zero()) {
    int dr = *r.max_deg(var);
    if (dr < db) return false;
    LaurentPoly lead = r.coeff_of(var, dr);
    if (!lead.is_constant()) return false;
    BigRational q = lead.constant_value() / lb;
    LaurentPoly qmono = LaurentPoly::monomial(a.vars(), [&] {
      Exps e(a.arity(), 0);
      e[var] = dr - db;
      return e;
    }(), q);
    quot += qmono;
    r -= qmono * b;
  }
  return true;
}

LaurentPoly LaurentPoly::gcd_univariate(const LaurentPoly& a, const LaurentPoly& b, int var) {
  // Euclid on univariate polynomials with rational coefficients; inputs must
  // have nonnegative exponents in `var` and constants elsewhere.
  LaurentPoly x = a, y = b;
  if (!x.is_zero()) x.strip_content();
  if (!y.is_zero()) y.strip_content();
  while (!y.is_zero()) {
    int dy = *y.max_deg(var);
    BigRational ly = y.coeff_of(var, dy).constant_value();
    while (!x.is_zero() && *x.max_deg(var) >= dy) {
      int dx = *x.max_deg(var);
      BigRational lx = x.coeff_of(var, dx).constant_value();
      Exps e(x.arity(), 0);
      e[var] = dx - dy;
      x -= monomial(x.vars(), e, lx / ly) * y;
    }
    std::swap(x, y);  // y is now the remainder
    if (!y.is_zero()) y.strip_content();
  }
  if (!x.is_zero()) x.strip_content();
  return x.is_zero() ? constant(a.vars(), BigRational(1)) : x;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print highest-exponent terms first for readability.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational ca = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool allzero = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    bool unit = ca.is_one();
    if (unit && allzero) {
      os << "1";
      continue;
    }
    bool need_star = false;
    if (!unit) {
      os << ca.str();
      need_star = true;
    }
    for (int i = 0; i < arity(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace heckeforge
