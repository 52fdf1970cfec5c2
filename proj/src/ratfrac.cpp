#include "heckeforge/ratfrac.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace heckeforge {

RatFrac::RatFrac(LaurentPoly n) : num_(std::move(n)), den_(LaurentPoly::constant(num_.vars(), BigRational(1))) {}

RatFrac::RatFrac(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (num_.vars() != den_.vars()) throw std::invalid_argument("RatFrac: ring mismatch");
  if (den_.is_zero()) throw std::domain_error("RatFrac: zero denominator");
  normalize();
}

RatFrac RatFrac::constant(std::vector<std::string> vars, const BigRational& c) {
  return RatFrac(LaurentPoly::constant(std::move(vars), c));
}

RatFrac RatFrac::variable(std::vector<std::string> vars, int idx, int exp) {
  return RatFrac(LaurentPoly::variable(std::move(vars), idx, exp));
}

RatFrac RatFrac::zero(std::vector<std::string> vars) {
  return constant(std::move(vars), BigRational(0));
}

RatFrac RatFrac::one(std::vector<std::string> vars) {
  return constant(std::move(vars), BigRational(1));
}

bool RatFrac::is_constant() const {
  if (num_.is_zero()) return true;
  if (num_.is_constant() && den_.is_constant()) return true;
  // Fall back on reduced check: num*1 vs den*c structural equality is not
  // needed; treat proportional monomials via normalize side effects only.
  return false;
}

BigRational RatFrac::constant_value() const {
  if (num_.is_zero()) return BigRational(0);
  if (!num_.is_constant() || !den_.is_constant())
    throw std::logic_error("RatFrac: not constant");
  return num_.constant_value() / den_.constant_value();
}

RatFrac RatFrac::operator-() const {
  RatFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFrac operator+(const RatFrac& a, const RatFrac& b) {
  return RatFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFrac operator-(const RatFrac& a, const RatFrac& b) {
  return RatFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFrac operator*(const RatFrac& a, const RatFrac& b) {
  return RatFrac(a.num_ * b.num_, a.den_ * b.den_);
}

RatFrac operator/(const RatFrac& a, const RatFrac& b) {
  if (b.is_zero()) throw std::domain_error("RatFrac: division by zero");
  return RatFrac(a.num_ * b.den_, a.den_ * b.num_);
}

RatFrac RatFrac::inverse() const {
  if (is_zero()) throw std::domain_error("RatFrac: inverse of zero");
  return RatFrac(den_, num_);
}

RatFrac RatFrac::pow(long e) const {
  if (e == 0) return one(vars());
  RatFrac base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  RatFrac r = one(vars());
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

bool operator==(const RatFrac& a, const RatFrac& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFrac RatFrac::specialized(const std::map<int, BigRational>& bindings) const {
  LaurentPoly d = den_.substituted(bindings);
  if (d.is_zero()) {
    std::ostringstream os;
    os << "specialize: denominator vanishes under binding {";
    for (const auto& [i, v] : bindings) os << vars()[i] << "=" << v.str() << " ";
    os << "}";
    throw std::domain_error(os.str());
  }
  return RatFrac(num_.substituted(bindings), std::move(d));
}

RatFrac RatFrac::specialized_by_name(const std::map<std::string, BigRational>& bindings) const {
  std::map<int, BigRational> by_idx;
  for (const auto& [name, v] : bindings) {
    int i = num_.var_index(name);
    if (i < 0) throw std::invalid_argument("specialize: unknown variable " + name);
    by_idx.emplace(i, v);
  }
  return specialized(by_idx);
}

double RatFrac::eval_double(const std::vector<double>& point) const {
  return num_.eval_double(point) / den_.eval_double(point);
}

RatFrac RatFrac::promoted(const std::vector<std::string>& new_vars) const {
  std::vector<int> where(vars().size(), -1);
  for (std::size_t i = 0; i < vars().size(); ++i) {
    for (std::size_t j = 0; j < new_vars.size(); ++j)
      if (new_vars[j] == vars()[i]) where[i] = static_cast<int>(j);
    if (where[i] < 0)
      throw std::invalid_argument("promoted: variable " + vars()[i] + " missing from target ring");
  }
  auto lift = [&](const LaurentPoly& p) {
    LaurentPoly out(new_vars);
    for (const auto& [e, c] : p.terms()) {
      LaurentPoly::Exps e2(new_vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) e2[where[i]] = e[i];
      out.add_term(e2, c);
    }
    return out;
  };
  return RatFrac(lift(num_), lift(den_));
}

std::vector<RatFrac> RatFrac::series(int var, int order) const {
  if (order < 0) throw std::invalid_argument("series: negative order");
  LaurentPoly n = num_, d = den_;
  int dmin = d.is_zero() ? 0 : *d.min_deg(var);
  if (dmin != 0) {
    d = d.shifted(var, -dmin);
    n = n.shifted(var, -dmin);
  }
  if (!n.is_zero() && *n.min_deg(var) < 0)
    throw std::domain_error("series: pole at " + vars()[var] + " = 0");
  LaurentPoly d0 = d.coeff_of(var, 0);
  if (d0.is_zero()) throw std::domain_error("series: pole at " + vars()[var] + " = 0");
  RatFrac d0f{d0};
  std::vector<RatFrac> coeffs;
  coeffs.reserve(order + 1);
  for (int t = 0; t <= order; ++t) {
    RatFrac acc{n.coeff_of(var, t)};
    for (int j = 1; j <= t; ++j) {
      LaurentPoly dj = d.coeff_of(var, j);
      if (dj.is_zero()) continue;
      acc -= RatFrac(dj) * coeffs[t - j];
    }
    acc = acc / d0f;
    acc.normalize();
    coeffs.push_back(std::move(acc));
  }
  return coeffs;
}

void RatFrac::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(num_.vars(), BigRational(1));
    return;
  }
  auto [cn, sn] = num_.strip_content();
  auto [cd, sd] = den_.strip_content();
  BigRational c = cn / cd;
  LaurentPoly::Exps shift(num_.arity());
  for (int i = 0; i < num_.arity(); ++i) shift[i] = sn[i] - sd[i];
  // One shared active variable: cancel the univariate gcd.
  auto an = num_.active_vars();
  auto ad = den_.active_vars();
  if (an.size() <= 1 && ad.size() <= 1 && (an.empty() || ad.empty() || an == ad)) {
    int var = !an.empty() ? an[0] : (!ad.empty() ? ad[0] : -1);
    if (var >= 0) {
      LaurentPoly g = LaurentPoly::gcd_univariate(num_, den_, var);
      if (!g.is_constant()) {
        LaurentPoly qn(num_.vars()), qd(num_.vars());
        if (LaurentPoly::divmod_univariate(num_, g, var, qn) &&
            LaurentPoly::divmod_univariate(den_, g, var, qd)) {
          num_ = qn;
          den_ = qd;
          auto [cn2, sn2] = num_.strip_content();
          auto [cd2, sd2] = den_.strip_content();
          c *= cn2 / cd2;
          for (int i = 0; i < num_.arity(); ++i) shift[i] += sn2[i] - sd2[i];
        }
      }
    }
  }
  // Fold scalar and monomial back into the numerator.
  LaurentPoly::Exps pos(shift.size(), 0), neg(shift.size(), 0);
  for (std::size_t i = 0; i < shift.size(); ++i)
    (shift[i] >= 0 ? pos[i] : neg[i]) = shift[i] >= 0 ? shift[i] : -shift[i];
  num_ = LaurentPoly::monomial(num_.vars(), pos, c) * num_;
  if (std::any_of(neg.begin(), neg.end(), [](int x) { return x != 0; }))
    den_ = LaurentPoly::monomial(den_.vars(), neg, BigRational(1)) * den_;
}

std::string RatFrac::str() const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str();
  std::string n = num_.str(), d = den_.str();
  std::string ln = num_.term_count() > 1 ? "(" + n + ")" : n;
  std::string ld = den_.term_count() > 1 ? "(" + d + ")" : d;
  return ln + "/" + ld;
}

RatFrac rf_reconstruct(int var, const std::vector<std::pair<BigRational, RatFrac>>& samples,
                       int deg_num, int deg_den) {
  if (static_cast<int>(samples.size()) < deg_num + deg_den + 2)
    throw std::invalid_argument("rf_reconstruct: need at least deg_num + deg_den + 2 samples");
  if (samples.empty()) throw std::invalid_argument("rf_reconstruct: no samples");
  auto vars = samples[0].second.vars();
  for (std::size_t i = 1; i < samples.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (samples[i].first == samples[j].first)
        throw std::invalid_argument("rf_reconstruct: duplicate sample point");

  std::vector<std::pair<BigRational, RatFrac>> pts(samples);
  std::sort(pts.begin(), pts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  const int un = deg_num + 1, ud = deg_den + 1, cols = un + ud;
  // Row per sample: sum_i a_i x^i - y * sum_j b_j x^j = 0.
  std::vector<std::vector<RatFrac>> m;
  for (const auto& [x, y] : pts) {
    if (y.num().uses_var(var) || y.den().uses_var(var))
      throw std::invalid_argument("rf_reconstruct: sample value involves the target variable");
    std::vector<RatFrac> row;
    row.reserve(cols);
    BigRational px(1);
    for (int i = 0; i < un; ++i) {
      row.push_back(RatFrac::constant(vars, px));
      px *= x;
    }
    px = BigRational(1);
    for (int j = 0; j < ud; ++j) {
      row.push_back(-(y * RatFrac::constant(vars, px)));
      px *= x;
    }
    m.push_back(std::move(row));
  }
  // Gaussian elimination; record pivot columns.
  std::vector<int> pivot_of_col(cols, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int pr = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r)
      if (!m[r][c].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    RatFrac inv = m[rank][c].inverse();
    for (int cc = c; cc < cols; ++cc) {
      m[rank][cc] = m[rank][cc] * inv;
      m[rank][cc].normalize();
    }
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      RatFrac f = m[r][c];
      for (int cc = c; cc < cols; ++cc) {
        m[r][cc] = m[r][cc] - f * m[rank][cc];
        m[r][cc].normalize();
      }
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  if (rank >= cols)
    throw std::runtime_error("rf_reconstruct: samples not consistent with the degree bound");
  // Free column: prefer the highest free denominator column, else numerator.
  int free_col = -1;
  for (int c = cols - 1; c >= 0; --c)
    if (pivot_of_col[c] < 0) {
      free_col = c;
      break;
    }
  std::vector<RatFrac> sol(cols, RatFrac::zero(vars));
  sol[free_col] = RatFrac::one(vars);
  for (int c = 0; c < cols; ++c) {
    int r = pivot_of_col[c];
    if (r < 0) continue;
    sol[c] = -m[r][free_col];
  }
  RatFrac N = RatFrac::zero(vars), D = RatFrac::zero(vars);
  for (int i = 0; i < un; ++i) N += sol[i] * RatFrac::variable(vars, var, i);
  for (int j = 0; j < ud; ++j) D += sol[un + j] * RatFrac::variable(vars, var, j);
  if (D.is_zero()) throw std::runtime_error("rf_reconstruct: degenerate denominator");
  RatFrac result = N / D;
  result.normalize();
  // Interpolation check against every sample.
  for (const auto& [x, y] : pts) {
    std::map<int, BigRational> bind{{var, x}};
    LaurentPoly dsub = result.den().substituted(bind);
    if (dsub.is_zero())
      throw std::runtime_error("rf_reconstruct: reconstructed function has a pole at a sample");
    if (result.specialized(bind) != y)
      throw std::runtime_error("rf_reconstruct: samples not consistent with the degree bound");
  }
  return result;
}

}  // namespace heckeforge
