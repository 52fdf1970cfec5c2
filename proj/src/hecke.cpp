#include "heckeforge/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckeforge {

HeckeAlgebra::HeckeAlgebra(AlgSign sign, int n, Grading grading,
                           std::vector<std::string> coeff_vars)
    : sign_(sign),
      n_(n),
      grading_(grading),
      vars_(std::move(coeff_vars)),
      cox_(sign == AlgSign::Plus ? WordSystem::SAff : WordSystem::SPrimeAff, n) {
  if (vars_.empty() || vars_[0] != "v")
    throw std::invalid_argument("HeckeAlgebra: coefficient ring must start with v");
  if (sign == AlgSign::Minus && n < 1)
    throw std::invalid_argument("HeckeAlgebra: minus sign needs n >= 1");
}

int HeckeAlgebra::param_exp(int i) const {
  if (sign_ == AlgSign::Plus) return i == 0 ? 0 : 1;
  return i == 1 ? 2 : 1;
}

RatFrac HeckeAlgebra::param(int i) const {
  return RatFrac::variable(vars_, 0, 2 * param_exp(i));
}

RatFrac HeckeAlgebra::q() const { return RatFrac::variable(vars_, 0, 2); }
RatFrac HeckeAlgebra::v() const { return RatFrac::variable(vars_, 0, 1); }

std::string HeckeAlgebra::active_profile() const {
  return grading_ == Grading::Orthogonal ? orthogonal_profile() : metaplectic_profile();
}

std::string HeckeAlgebra::orthogonal_profile() const {
  return sign_ == AlgSign::Plus ? "l0" : "l2";
}

std::string HeckeAlgebra::metaplectic_profile() const {
  return sign_ == AlgSign::Plus ? "l" : "lprime";
}

HeckeAlgebra HeckeAlgebra::tw_swapped() const {
  return HeckeAlgebra(sign_, n_,
                      grading_ == Grading::Orthogonal ? Grading::Metaplectic
                                                      : Grading::Orthogonal,
                      vars_);
}

std::vector<int> HeckeAlgebra::spherical_gens() const {
  std::vector<int> g;
  int lo = sign_ == AlgSign::Plus ? 1 : 2;
  for (int i = lo; i <= n_; ++i) g.push_back(i);
  return g;
}

std::string HeckeAlgebra::id() const {
  std::string s = sign_ == AlgSign::Plus ? "H+" : "H-";
  s += "(n=" + std::to_string(n_) + ",";
  s += grading_ == Grading::Orthogonal ? "orthogonal" : "metaplectic";
  s += ")";
  return s;
}

HeckeElt HeckeElt::unit(const HeckeAlgebra& alg) {
  HeckeElt e(&alg);
  e.add_term(AffineElt::identity(alg.rank()), RatFrac::one(alg.coeff_vars()));
  return e;
}

HeckeElt HeckeElt::basis(const HeckeAlgebra& alg, const AffineElt& x) {
  if (!alg.cox().member(x))
    throw std::domain_error("HeckeElt::basis: element not in the algebra's group");
  HeckeElt e(&alg);
  e.add_term(x, RatFrac::one(alg.coeff_vars()));
  return e;
}

void HeckeElt::add_term(const AffineElt& x, const RatFrac& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    terms_.emplace(x, c);
  } else {
    it->second += c;
    it->second.normalize();
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFrac HeckeElt::coeff(const AffineElt& x) const {
  auto it = terms_.find(x);
  if (it == terms_.end()) return RatFrac::zero(alg_->coeff_vars());
  return it->second;
}

HeckeElt HeckeElt::operator-() const {
  HeckeElt r(alg_);
  for (const auto& [x, c] : terms_) r.terms_.emplace(x, -c);
  return r;
}

static void check_same_algebra(const HeckeElt& a, const HeckeElt& b) {
  if (!a.algebra() || !b.algebra() || !a.algebra()->same_presentation(*b.algebra()))
    throw std::invalid_argument("HeckeElt: algebra mismatch");
}

HeckeElt operator+(const HeckeElt& a, const HeckeElt& b) {
  check_same_algebra(a, b);
  HeckeElt r = a;
  for (const auto& [x, c] : b.terms()) r.add_term(x, c);
  return r;
}

HeckeElt operator-(const HeckeElt& a, const HeckeElt& b) {
  check_same_algebra(a, b);
  HeckeElt r = a;
  for (const auto& [x, c] : b.terms()) r.add_term(x, -c);
  return r;
}

HeckeElt HeckeElt::scaled(const RatFrac& c) const {
  HeckeElt r(alg_);
  if (c.is_zero()) return r;
  for (const auto& [x, t] : terms_) {
    RatFrac p = t * c;
    p.normalize();
    if (!p.is_zero()) r.terms_.emplace(x, p);
  }
  return r;
}

bool operator==(const HeckeElt& a, const HeckeElt& b) {
  check_same_algebra(a, b);
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = a.terms_.begin();
  auto jt = b.terms_.begin();
  for (; it != a.terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first)) return false;
    if (it->second != jt->second) return false;
  }
  return true;
}

long HeckeElt::max_support_length() const {
  long m = 0;
  for (const auto& [x, c] : terms_) m = std::max(m, alg_->cox().length(x));
  return m;
}

HeckeElt mul_gen_left(const HeckeAlgebra& alg, int i, const HeckeElt& b) {
  HeckeElt r(b.algebra());
  const auto& cox = alg.cox();
  const AffineElt& s = cox.generator(i);
  RatFrac p = alg.param(i);
  RatFrac pm1 = p - RatFrac::one(alg.coeff_vars());
  for (const auto& [w, c] : b.terms()) {
    AffineElt sw = s.mul(w);
    if (!cox.left_descent(w, i)) {  // l(sw) > l(w)
      r.add_term(sw, c);
    } else {
      r.add_term(sw, p * c);
      r.add_term(w, pm1 * c);
    }
  }
  return r;
}

HeckeElt mul_gen_right(const HeckeElt& a, const HeckeAlgebra& alg, int i) {
  HeckeElt r(a.algebra());
  const auto& cox = alg.cox();
  const AffineElt& s = cox.generator(i);
  RatFrac p = alg.param(i);
  RatFrac pm1 = p - RatFrac::one(alg.coeff_vars());
  for (const auto& [w, c] : a.terms()) {
    AffineElt ws = w.mul(s);
    if (!cox.right_descent(w, i)) {  // l(ws) > l(w)
      r.add_term(ws, c);
    } else {
      r.add_term(ws, p * c);
      r.add_term(w, pm1 * c);
    }
  }
  return r;
}

HeckeElt mul_basis_left(const HeckeAlgebra& alg, const AffineElt& x, const HeckeElt& b) {
  auto word = alg.cox().reduced_word(x);
  HeckeElt r = b;
  for (auto it = word.rbegin(); it != word.rend(); ++it) r = mul_gen_left(alg, *it, r);
  return r;
}

HeckeElt mul_basis_right(const HeckeElt& a, const HeckeAlgebra& alg, const AffineElt& x) {
  auto word = alg.cox().reduced_word(x);
  HeckeElt r = a;
  for (int i : word) r = mul_gen_right(r, alg, i);
  return r;
}

HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
  check_same_algebra(a, b);
  const HeckeAlgebra& alg = *a.algebra();
  HeckeElt r(&alg);
  for (const auto& [x, c] : a.terms()) {
    HeckeElt part = mul_basis_left(alg, x, b).scaled(c);
    r = r + part;
  }
  return r;
}

HeckeElt invert_basis(const HeckeAlgebra& alg, const AffineElt& x) {
  auto word = alg.cox().reduced_word(x);
  HeckeElt r = HeckeElt::unit(alg);
  RatFrac one = RatFrac::one(alg.coeff_vars());
  // (T_{i1}...T_{il})^{-1} = T_{il}^{-1} ... T_{i1}^{-1}
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    RatFrac pinv = alg.param(*it).inverse();
    HeckeElt t = mul_gen_right(r, alg, *it).scaled(pinv);
    r = t + r.scaled(pinv - one);
  }
  return r;
}

HeckeElt star(const HeckeElt& a) {
  HeckeElt r(a.algebra());
  for (const auto& [x, c] : a.terms()) r.add_term(x.inverse(), c);
  return r;
}

RatFrac trace_form(const HeckeElt& a, const HeckeElt& b) {
  check_same_algebra(a, b);
  const HeckeAlgebra& alg = *a.algebra();
  std::string prof = alg.active_profile();
  RatFrac acc = RatFrac::zero(alg.coeff_vars());
  for (const auto& [x, c] : a.terms()) {
    RatFrac cb = b.coeff(x);
    if (cb.is_zero()) continue;
    long wl = alg.cox().weighted_length(prof, x);
    acc += c * cb * RatFrac::variable(alg.coeff_vars(), 0, static_cast<int>(2 * wl));
  }
  acc.normalize();
  return acc;
}

RatFrac te_pairing(const HeckeElt& a, const HeckeElt& b) {
  HeckeElt p = mul(star(a), b);
  return p.coeff(AffineElt::identity(a.algebra()->rank()));
}

HeckeElt spherical_idempotent(const HeckeAlgebra& alg) {
  auto gens = alg.spherical_gens();
  auto group = enumerate_subgroup(alg.cox(), gens);
  LaurentPoly w = poincare_poly(alg.cox(), alg.orthogonal_profile(), gens);
  // Promote W(q) into the algebra's coefficient ring.
  LaurentPoly wq(alg.coeff_vars());
  for (const auto& [e, c] : w.terms()) {
    LaurentPoly::Exps e2(alg.coeff_vars().size(), 0);
    e2[0] = e[0];
    wq.add_term(e2, c);
  }
  RatFrac norm = RatFrac::one(alg.coeff_vars()) / RatFrac(wq);
  HeckeElt e(&alg);
  for (const auto& x : group) e.add_term(x, norm);
  return e;
}

LeviDatum LeviDatum::minimal(const HeckeAlgebra& alg) {
  LeviDatum l;
  l.blocks = alg.sign() == AlgSign::Plus ? BlockLevi::minimal_plus(alg.rank())
                                         : BlockLevi::minimal_minus(alg.rank());
  return l;
}

namespace {

// B<- dominant: 0 <= lam_1 <= ... <= lam_n (skipping the symplectic block's
// first coordinate constraint handled by 0 <= everywhere).
bool dominant_backarrow(const std::vector<long>& lam) {
  for (std::size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] > lam[i + 1]) return false;
  return lam.empty() ? true : lam[0] >= 0;
}

// Decompose lambda = plus - minus with both B<- dominant; in the minus-sign
// algebra the first coordinate stays zero.
void dominant_decompose(const std::vector<long>& lam, bool skip_first, std::vector<long>& plus,
                        std::vector<long>& minus) {
  const int n = static_cast<int>(lam.size());
  std::vector<long> mu(n, 0);
  int start = skip_first ? 1 : 0;
  // mu ascending with lam + mu ascending too.
  for (int i = start + 1; i < n; ++i)
    mu[i] = std::max(mu[i - 1], mu[i - 1] + lam[i - 1] - lam[i]);
  // common shift keeps both ascending and makes both nonnegative
  long shift = 0;
  for (int i = start; i < n; ++i) shift = std::max(shift, -(lam[i] + mu[i]));
  for (int i = start; i < n; ++i) mu[i] += shift;
  plus.assign(n, 0);
  minus = mu;
  for (int i = start; i < n; ++i) plus[i] = lam[i] + mu[i];
  if (skip_first) {
    plus[0] = 0;
    minus[0] = 0;
  }
  if (!dominant_backarrow(std::vector<long>(plus.begin() + start, plus.end())) ||
      !dominant_backarrow(std::vector<long>(minus.begin() + start, minus.end())))
    throw std::logic_error("dominant_decompose: failed to produce dominant parts");
}

// Weighted length of t_lambda inside the Levi: GL blocks contribute
// sum |lam_i - lam_j|, the symplectic block its own rank-nb orthogonal
// grading.
long levi_translation_length(const LeviDatum& levi, const HeckeAlgebra& alg,
                             const std::vector<long>& lam) {
  const BlockLevi& b = levi.blocks;
  long total = 0;
  int start = b.nb;
  for (int sz : b.gl) {
    for (int i = start; i < start + sz; ++i)
      for (int j = start; j < i; ++j) total += std::labs(lam[i] - lam[j]);
    start += sz;
  }
  if (b.nb > 0) {
    std::vector<long> block(lam.begin(), lam.begin() + b.nb);
    bool zero = std::all_of(block.begin(), block.end(), [](long t) { return t == 0; });
    if (!zero) {
      if (alg.sign() == AlgSign::Plus) {
        CoxeterDescriptor sub(WordSystem::SAff, b.nb);
        total += sub.weighted_length("l0", AffineElt::translation(block));
      } else {
        if (block[0] != 0)
          throw std::domain_error("modulus: minus-case lattice has no first coordinate");
        CoxeterDescriptor sub(WordSystem::SPrimeAff, b.nb);
        total += sub.weighted_length("l2", AffineElt::translation(block));
      }
    }
  }
  return total;
}

long full_translation_length(const HeckeAlgebra& alg, const std::vector<long>& lam) {
  bool zero = std::all_of(lam.begin(), lam.end(), [](long t) { return t == 0; });
  if (zero) return 0;
  return alg.cox().weighted_length(alg.orthogonal_profile(), AffineElt::translation(lam));
}

}  // namespace

long modulus_half_exponent(const LeviDatum& levi, const HeckeAlgebra& alg,
                           const std::vector<long>& lambda) {
  bool skip_first = alg.sign() == AlgSign::Minus;
  if (skip_first && lambda[0] != 0)
    throw std::domain_error("modulus: minus-case cocharacters have zero first coordinate");
  std::vector<long> plus, minus;
  dominant_decompose(lambda, skip_first, plus, minus);
  long dplus = full_translation_length(alg, plus) - levi_translation_length(levi, alg, plus);
  long dminus = full_translation_length(alg, minus) - levi_translation_length(levi, alg, minus);
  long d = dplus - dminus;
  return levi.opposite ? -d : d;
}

RatFrac modulus(const LeviDatum& levi, const HeckeAlgebra& alg, const std::vector<long>& lambda) {
  long d = modulus_half_exponent(levi, alg, lambda);
  return RatFrac::variable(alg.coeff_vars(), 0, static_cast<int>(-2 * d));
}

HeckeElt theta(const HeckeAlgebra& alg, const std::vector<long>& lambda) {
  LeviDatum min = LeviDatum::minimal(alg);
  bool skip_first = alg.sign() == AlgSign::Minus;
  std::vector<long> plus, minus;
  dominant_decompose(lambda, skip_first, plus, minus);
  auto half_twist = [&](const std::vector<long>& mu) {
    long d = modulus_half_exponent(min, alg, mu);
    return RatFrac::variable(alg.coeff_vars(), 0, static_cast<int>(-d));
  };
  HeckeElt tp = HeckeElt::basis(alg, AffineElt::translation(plus)).scaled(half_twist(plus));
  HeckeElt tm =
      invert_basis(alg, AffineElt::translation(minus)).scaled(half_twist(minus).inverse());
  return mul(tp, tm);
}

HeckeElt tnor_embed(const LeviDatum& levi, const HeckeAlgebra& alg, const AffineElt& x,
                    int search_radius) {
  bool minus = alg.sign() == AlgSign::Minus;
  if (!levi.blocks.levi_contains(x, minus))
    throw std::domain_error("tnor_embed: element not in the Levi subgroup");
  auto embed_positive = [&](const AffineElt& y) {
    long d = modulus_half_exponent(levi, alg, y.trans);
    return HeckeElt::basis(alg, y).scaled(
        RatFrac::variable(alg.coeff_vars(), 0, static_cast<int>(-d)));
  };
  if (is_positive(levi.blocks, x)) return embed_positive(x);
  std::vector<long> mu = levi.blocks.central_positive_coweight();
  for (int r = 1; r <= search_radius; ++r) {
    std::vector<long> rmu(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) rmu[i] = r * mu[i];
    AffineElt z = AffineElt::translation(rmu);
    AffineElt zx = z.mul(x);
    if (is_positive(levi.blocks, z) && is_positive(levi.blocks, zx)) {
      // t(z)^{-1} via invert of the single positive translation
      long dz = modulus_half_exponent(levi, alg, z.trans);
      HeckeElt zinv = invert_basis(alg, z).scaled(
          RatFrac::variable(alg.coeff_vars(), 0, static_cast<int>(dz)));
      return mul(zinv, embed_positive(zx));
    }
  }
  throw std::runtime_error("tnor_embed: central correction not found within radius");
}

bool check_character(const HeckeAlgebra& alg, const std::map<int, RatFrac>& values) {
  const auto idx = alg.cox().gen_indices();
  for (int i : idx) {
    auto it = values.find(i);
    if (it == values.end()) return false;
    const RatFrac& t = it->second;
    RatFrac one = RatFrac::one(alg.coeff_vars());
    // (t - p)(t + 1) = 0
    if (!((t - alg.param(i)) * (t + one)).is_zero()) return false;
  }
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      int m = alg.cox().bond_order(idx[a], idx[b]);
      if (m % 2 == 1 && m > 1) {
        if (values.at(idx[a]) != values.at(idx[b])) return false;
      }
    }
  }
  return true;
}

}  // namespace heckeforge
