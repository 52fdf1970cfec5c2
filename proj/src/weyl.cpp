#include "heckeforge/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace heckeforge {

SignedPerm SignedPerm::identity(int n) {
  SignedPerm u;
  u.perm.resize(n);
  std::iota(u.perm.begin(), u.perm.end(), 0);
  u.signs.assign(n, 1);
  return u;
}

bool SignedPerm::is_identity() const {
  for (int j = 0; j < rank(); ++j)
    if (perm[j] != j || signs[j] != 1) return false;
  return true;
}

SignedPerm SignedPerm::compose(const SignedPerm& rhs) const {
  const int n = rank();
  if (rhs.rank() != n) throw std::invalid_argument("SignedPerm: rank mismatch");
  SignedPerm r;
  r.perm.resize(n);
  r.signs.resize(n);
  for (int j = 0; j < n; ++j) {
    r.perm[j] = perm[rhs.perm[j]];
    r.signs[j] = rhs.signs[j] * signs[rhs.perm[j]];
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  const int n = rank();
  SignedPerm r;
  r.perm.resize(n);
  r.signs.resize(n);
  for (int j = 0; j < n; ++j) {
    r.perm[perm[j]] = j;
    r.signs[perm[j]] = signs[j];
  }
  return r;
}

std::vector<long> SignedPerm::apply(const std::vector<long>& x) const {
  const int n = rank();
  std::vector<long> y(n, 0);
  for (int j = 0; j < n; ++j) y[perm[j]] = signs[j] * x[j];
  return y;
}

std::vector<int> SignedPerm::apply_root(const std::vector<int>& beta) const {
  const int n = rank();
  std::vector<int> y(n, 0);
  for (int j = 0; j < n; ++j) y[perm[j]] = signs[j] * beta[j];
  return y;
}

int SignedPerm::flip_count() const {
  int c = 0;
  for (int s : signs) c += (s < 0);
  return c;
}

AffineElt AffineElt::identity(int n) {
  return AffineElt{std::vector<long>(n, 0), SignedPerm::identity(n)};
}

AffineElt AffineElt::translation(const std::vector<long>& lambda) {
  return AffineElt{lambda, SignedPerm::identity(static_cast<int>(lambda.size()))};
}

AffineElt AffineElt::from_finite(const SignedPerm& u) {
  return AffineElt{std::vector<long>(u.rank(), 0), u};
}

bool AffineElt::is_identity() const {
  return fin.is_identity() && std::all_of(trans.begin(), trans.end(), [](long t) { return t == 0; });
}

AffineElt AffineElt::mul(const AffineElt& rhs) const {
  AffineElt r;
  std::vector<long> um = fin.apply(rhs.trans);
  r.trans.resize(rank());
  for (int i = 0; i < rank(); ++i) r.trans[i] = trans[i] + um[i];
  r.fin = fin.compose(rhs.fin);
  return r;
}

AffineElt AffineElt::inverse() const {
  AffineElt r;
  r.fin = fin.inverse();
  std::vector<long> m = r.fin.apply(trans);
  r.trans.resize(rank());
  for (int i = 0; i < rank(); ++i) r.trans[i] = -m[i];
  return r;
}

bool root_positive_arrow(const std::vector<int>& beta) {
  for (int x : beta) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

bool root_positive_backarrow(const std::vector<int>& beta) {
  for (auto it = beta.rbegin(); it != beta.rend(); ++it) {
    if (*it > 0) return true;
    if (*it < 0) return false;
  }
  return false;
}

long pair_root_coweight(const std::vector<int>& beta, const std::vector<long>& lam) {
  long s = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) s += static_cast<long>(beta[i]) * lam[i];
  return s;
}

bool AffineRoot::positive() const {
  if (k != 0) return k > 0;
  return root_positive_arrow(beta);
}

AffineRoot act_fun(const AffineElt& w, const AffineRoot& a) {
  AffineRoot r;
  r.beta = w.fin.apply_root(a.beta);
  r.k = a.k - pair_root_coweight(r.beta, w.trans);
  return r;
}

AffineRoot act_conj(const AffineElt& w, const AffineRoot& a) {
  AffineRoot r;
  r.beta = w.fin.apply_root(a.beta);
  r.k = a.k + pair_root_coweight(r.beta, w.trans);
  return r;
}

std::string word_system_name(WordSystem s) {
  switch (s) {
    case WordSystem::SAff: return "s";
    case WordSystem::SPrimeAff: return "sprime";
    case WordSystem::TFin: return "t";
    case WordSystem::TPrimeFin: return "tprime";
  }
  return "?";
}

std::optional<WordSystem> word_system_from_name(const std::string& s) {
  if (s == "s") return WordSystem::SAff;
  if (s == "sprime") return WordSystem::SPrimeAff;
  if (s == "t") return WordSystem::TFin;
  if (s == "tprime") return WordSystem::TPrimeFin;
  return std::nullopt;
}

namespace {

std::vector<int> unit_root(int n, int i, int c) {
  std::vector<int> b(n, 0);
  b[i] = c;
  return b;
}

std::vector<int> diff_root(int n, int i, int j) {  // e_i - e_j
  std::vector<int> b(n, 0);
  b[i] += 1;
  b[j] -= 1;
  return b;
}

SignedPerm transposition(int n, int i, int j) {
  SignedPerm u = SignedPerm::identity(n);
  std::swap(u.perm[i], u.perm[j]);
  return u;
}

SignedPerm flip_at(int n, int i) {
  SignedPerm u = SignedPerm::identity(n);
  u.signs[i] = -1;
  return u;
}

}  // namespace

CoxeterDescriptor::CoxeterDescriptor(WordSystem sys, int n) : sys_(sys), n_(n) {
  if (n < 1) throw std::invalid_argument("CoxeterDescriptor: rank >= 1 required");
  gens_.assign(n + 1, AffineElt::identity(n));
  roots_.assign(n + 1, AffineRoot{std::vector<int>(n, 0), 0});
  switch (sys_) {
    case WordSystem::SAff: {
      // s_0 = affine reflection along 1 - 2 eps_1.
      AffineElt s0;
      s0.trans = std::vector<long>(n, 0);
      s0.trans[0] = 1;
      s0.fin = flip_at(n, 0);
      gens_[0] = s0;
      roots_[0] = AffineRoot{unit_root(n, 0, -2), 1};
      for (int i = 1; i < n; ++i) {
        gens_[i] = AffineElt::from_finite(transposition(n, i - 1, i));
        roots_[i] = AffineRoot{diff_root(n, i - 1, i), 0};
      }
      gens_[n] = AffineElt::from_finite(flip_at(n, n - 1));
      roots_[n] = AffineRoot{unit_root(n, n - 1, 2), 0};
      break;
    }
    case WordSystem::SPrimeAff: {
      // s'_1 = s_1 s_0 s_1, the affine reflection along 1 - 2 eps_2 (n >= 2).
      if (n >= 2) {
        AffineElt sp1;
        sp1.trans = std::vector<long>(n, 0);
        sp1.trans[1] = 1;
        sp1.fin = flip_at(n, 1);
        gens_[1] = sp1;
        roots_[1] = AffineRoot{unit_root(n, 1, -2), 1};
      } else {
        AffineElt sp1;
        sp1.trans = std::vector<long>(1, -1);
        sp1.fin = flip_at(1, 0);
        gens_[1] = sp1;  // reflection at x = -1/2
        roots_[1] = AffineRoot{unit_root(1, 0, 2), 1};
      }
      for (int i = 2; i < n; ++i) {
        gens_[i] = AffineElt::from_finite(transposition(n, i - 1, i));
        roots_[i] = AffineRoot{diff_root(n, i - 1, i), 0};
      }
      if (n >= 2) {
        gens_[n] = AffineElt::from_finite(flip_at(n, n - 1));
        roots_[n] = AffineRoot{unit_root(n, n - 1, 2), 0};
      }
      break;
    }
    case WordSystem::TFin: {
      gens_[1] = AffineElt::from_finite(flip_at(n, 0));
      roots_[1] = AffineRoot{unit_root(n, 0, 2), 0};
      for (int i = 2; i <= n; ++i) {
        gens_[i] = AffineElt::from_finite(transposition(n, i - 2, i - 1));
        roots_[i] = AffineRoot{diff_root(n, i - 1, i - 2), 0};
      }
      break;
    }
    case WordSystem::TPrimeFin: {
      if (n < 2) throw std::invalid_argument("t'-system needs rank >= 2");
      gens_[2] = AffineElt::from_finite(flip_at(n, 1));
      roots_[2] = AffineRoot{unit_root(n, 1, 2), 0};
      for (int i = 3; i <= n; ++i) {
        gens_[i] = AffineElt::from_finite(transposition(n, i - 2, i - 1));
        roots_[i] = AffineRoot{diff_root(n, i - 1, i - 2), 0};
      }
      break;
    }
  }
}

int CoxeterDescriptor::first_gen() const {
  switch (sys_) {
    case WordSystem::SAff: return 0;
    case WordSystem::SPrimeAff: return 1;
    case WordSystem::TFin: return 1;
    case WordSystem::TPrimeFin: return 2;
  }
  return 0;
}

int CoxeterDescriptor::last_gen() const { return n_; }

std::vector<int> CoxeterDescriptor::gen_indices() const {
  std::vector<int> v;
  for (int i = first_gen(); i <= last_gen(); ++i) v.push_back(i);
  return v;
}

const AffineElt& CoxeterDescriptor::generator(int i) const {
  if (i < first_gen() || i > last_gen()) throw std::out_of_range("generator index");
  return gens_[i];
}

const AffineRoot& CoxeterDescriptor::simple_root(int i) const {
  if (i < first_gen() || i > last_gen()) throw std::out_of_range("generator index");
  return roots_[i];
}

int CoxeterDescriptor::bond_order(int i, int j) const {
  if (i == j) return 1;
  if (i > j) std::swap(i, j);
  if (j != i + 1) return 2;
  switch (sys_) {
    case WordSystem::SAff:
      if (n_ == 1) return 0;  // infinite bond of affine A_1
      if (i == 0 || j == n_) return 4;
      return 3;
    case WordSystem::SPrimeAff:
      if (n_ == 2) return 0;
      if (i == 1 || j == n_) return 4;
      return 3;
    case WordSystem::TFin:
      if (i == 1) return n_ >= 2 ? 4 : 1;
      return 3;
    case WordSystem::TPrimeFin:
      if (i == 2) return 4;
      return 3;
  }
  return 2;
}

bool CoxeterDescriptor::member(const AffineElt& x) const {
  if (x.rank() != n_) return false;
  bool finite = std::all_of(x.trans.begin(), x.trans.end(), [](long t) { return t == 0; });
  bool fixes1 = n_ >= 2 ? (x.fin.perm[0] == 0 && x.fin.signs[0] == 1) : true;
  switch (sys_) {
    case WordSystem::SAff: return true;
    case WordSystem::SPrimeAff:
      if (n_ == 1) {
        // <s'_1> = {e, s'_1} inside C~_1.
        return x.is_identity() || x == gens_[1];
      }
      return x.trans[0] == 0 && fixes1;
    case WordSystem::TFin: return finite;
    case WordSystem::TPrimeFin: return finite && fixes1;
  }
  return false;
}

bool CoxeterDescriptor::right_descent(const AffineElt& x, int i) const {
  if (is_affine()) return !act_fun(x, simple_root(i)).positive();
  return !root_positive_backarrow(x.fin.apply_root(simple_root(i).beta));
}

bool CoxeterDescriptor::left_descent(const AffineElt& x, int i) const {
  return right_descent(x.inverse(), i);
}

AffineElt CoxeterDescriptor::word_to_elt(const std::vector<int>& word) const {
  AffineElt x = AffineElt::identity(n_);
  for (int i : word) x = x.mul(generator(i));
  return x;
}

std::vector<int> CoxeterDescriptor::reduced_word(const AffineElt& x) const {
  if (!member(x))
    throw std::domain_error("reduced_word: element not in the group of this descriptor");
  std::vector<int> collected;
  AffineElt y = x;
  const std::size_t cap = 1u << 22;
  while (!y.is_identity()) {
    bool found = false;
    for (int i = first_gen(); i <= last_gen(); ++i) {
      if (right_descent(y, i)) {
        y = y.mul(generator(i));
        collected.push_back(i);
        found = true;
        break;
      }
    }
    if (!found || collected.size() > cap)
      throw std::logic_error("reduced_word: descent failure");
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

std::vector<int> CoxeterDescriptor::reduced_word_random(const AffineElt& x,
                                                        std::mt19937_64& rng) const {
  if (!member(x))
    throw std::domain_error("reduced_word: element not in the group of this descriptor");
  std::vector<int> collected;
  AffineElt y = x;
  while (!y.is_identity()) {
    std::vector<int> descents;
    for (int i = first_gen(); i <= last_gen(); ++i)
      if (right_descent(y, i)) descents.push_back(i);
    if (descents.empty()) throw std::logic_error("reduced_word: descent failure");
    int pick = descents[rng() % descents.size()];
    y = y.mul(generator(pick));
    collected.push_back(pick);
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

long CoxeterDescriptor::length(const AffineElt& x) const {
  return static_cast<long>(reduced_word(x).size());
}

std::vector<std::string> CoxeterDescriptor::profile_names() const {
  switch (sys_) {
    case WordSystem::SAff: return {"l", "l0"};
    case WordSystem::SPrimeAff: return {"lprime", "l2"};
    default: return {"l"};
  }
}

int CoxeterDescriptor::profile_weight(const std::string& profile, int gen) const {
  if (gen < first_gen() || gen > last_gen()) throw std::out_of_range("profile_weight: generator");
  if (profile == "l") return 1;
  if (profile == "l0") {
    if (sys_ != WordSystem::SAff) throw std::invalid_argument("profile l0 lives on the s-system");
    return gen == 0 ? 0 : 1;
  }
  if (profile == "lprime") {
    if (sys_ != WordSystem::SPrimeAff)
      throw std::invalid_argument("profile lprime lives on the s'-system");
    return gen == 1 ? 3 : 1;
  }
  if (profile == "l2") {
    if (sys_ != WordSystem::SPrimeAff)
      throw std::invalid_argument("profile l2 lives on the s'-system");
    return gen == 1 ? 2 : 1;
  }
  throw std::invalid_argument("unknown weight profile " + profile);
}

long CoxeterDescriptor::weighted_length(const std::string& profile, const AffineElt& x) const {
  long s = 0;
  for (int i : reduced_word(x)) s += profile_weight(profile, i);
  return s;
}

long CoxeterDescriptor::occurrence_count(const AffineElt& x, int g, std::mt19937_64& rng,
                                         int tries) const {
  std::optional<long> agreed;
  for (int t = 0; t < std::max(1, tries); ++t) {
    auto word = t == 0 ? reduced_word(x) : reduced_word_random(x, rng);
    long c = static_cast<long>(std::count(word.begin(), word.end(), g));
    if (agreed && *agreed != c)
      throw std::logic_error("occurrence_count: disagreement across reduced words");
    agreed = c;
  }
  return *agreed;
}

std::vector<int> substitute_prime_word(WordSystem primed, const std::vector<int>& word) {
  std::vector<int> out;
  for (int i : word) {
    if (primed == WordSystem::SPrimeAff) {
      if (i == 1) {
        out.insert(out.end(), {1, 0, 1});
      } else {
        out.push_back(i);
      }
    } else if (primed == WordSystem::TPrimeFin) {
      if (i == 2) {
        out.insert(out.end(), {2, 1, 2});
      } else {
        out.push_back(i);
      }
    } else {
      throw std::invalid_argument("substitute_prime_word: not a primed system");
    }
  }
  return out;
}

AffineElt embed_prime(int n, WordSystem primed, const std::vector<int>& word) {
  CoxeterDescriptor d(primed, n);
  return d.word_to_elt(word);
}

std::vector<AffineElt> enumerate_subgroup(const CoxeterDescriptor& d, const std::vector<int>& gens,
                                          std::size_t cap) {
  std::set<AffineElt> seen;
  std::deque<AffineElt> queue;
  AffineElt e = AffineElt::identity(d.rank());
  seen.insert(e);
  queue.push_back(e);
  while (!queue.empty()) {
    AffineElt x = queue.front();
    queue.pop_front();
    for (int g : gens) {
      AffineElt y = x.mul(d.generator(g));
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw std::runtime_error("enumerate_subgroup: generation exceeded cap (infinite?)");
        queue.push_back(y);
      }
    }
  }
  return std::vector<AffineElt>(seen.begin(), seen.end());
}

std::vector<std::pair<AffineElt, int>> enumerate_ball(const CoxeterDescriptor& d, int radius) {
  std::set<AffineElt> seen;
  std::vector<std::pair<AffineElt, int>> out;
  std::vector<AffineElt> frontier{AffineElt::identity(d.rank())};
  seen.insert(frontier[0]);
  out.emplace_back(frontier[0], 0);
  for (int depth = 0; depth < radius; ++depth) {
    std::vector<AffineElt> next;
    for (const auto& x : frontier) {
      for (int i : d.gen_indices()) {
        if (!d.right_descent(x, i)) {
          AffineElt y = x.mul(d.generator(i));
          if (seen.insert(y).second) {
            next.push_back(y);
            out.emplace_back(y, depth + 1);
          }
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

LaurentPoly poincare_poly(const CoxeterDescriptor& d, const std::string& profile,
                          const std::vector<int>& gens) {
  auto elems = enumerate_subgroup(d, gens);
  LaurentPoly out({"v"});
  for (const auto& w : elems) {
    long wl = d.weighted_length(profile, w);
    out.add_term({static_cast<int>(2 * wl)}, BigRational(1));  // q = v^2
  }
  return out;
}

BlockLevi BlockLevi::minimal_plus(int n) {
  BlockLevi l;
  l.n = n;
  l.nb = 0;
  l.gl.assign(n, 1);
  return l;
}

BlockLevi BlockLevi::minimal_minus(int n) {
  BlockLevi l;
  l.n = n;
  l.nb = 1;
  l.gl.assign(n - 1, 1);
  return l;
}

bool BlockLevi::in_levi_roots(const std::vector<int>& beta) const {
  std::vector<int> sup;
  for (int i = 0; i < n; ++i)
    if (beta[i] != 0) sup.push_back(i);
  if (sup.size() == 1) return sup[0] < nb;  // +-2e_i or would-be +-e_i
  // two coordinates
  int i = sup[0], j = sup[1];
  if (i < nb && j < nb) return true;
  if (i < nb || j < nb) return false;
  // same GL block and a (1,-1) pattern
  if (beta[i] + beta[j] != 0) return false;
  int start = nb;
  for (int sz : gl) {
    if (i >= start && i < start + sz) return j >= start && j < start + sz;
    start += sz;
  }
  return false;
}

std::vector<std::vector<int>> BlockLevi::unipotent_roots() const {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> b(n, 0);
    b[i] = 2;
    if (!in_levi_roots(b)) out.push_back(b);
  }
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      for (int s : {+1, -1}) {
        std::vector<int> b(n, 0);
        b[i] = 1;
        b[j] = s;
        if (!in_levi_roots(b)) out.push_back(b);
      }
    }
  }
  return out;
}

bool BlockLevi::levi_contains(const AffineElt& x, bool minus_case) const {
  const SignedPerm& u = x.fin;
  // symplectic block closed under the signed action
  for (int j = 0; j < nb; ++j)
    if (u.perm[j] >= nb) return false;
  int start = nb;
  for (int sz : gl) {
    for (int j = start; j < start + sz; ++j) {
      if (u.perm[j] < start || u.perm[j] >= start + sz) return false;
      if (u.signs[j] != 1) return false;
    }
    start += sz;
  }
  if (minus_case) {
    if (x.trans[0] != 0) return false;
    if (!(u.perm[0] == 0 && u.signs[0] == 1)) return false;
  }
  return true;
}

std::vector<long> BlockLevi::central_positive_coweight() const {
  std::vector<long> mu(n, 0);
  int start = nb;
  long v = 1;
  for (int sz : gl) {
    for (int j = start; j < start + sz; ++j) mu[j] = v;
    start += sz;
    ++v;
  }
  return mu;
}

bool is_positive(const BlockLevi& levi, const AffineElt& x) {
  auto phi_u = levi.unipotent_roots();
  auto minlevel = [](const std::vector<int>& beta) {
    return root_positive_arrow(beta) ? 0L : 1L;
  };
  auto contains = [&](const std::vector<std::vector<int>>& phi, const std::vector<int>& g) {
    return std::find(phi.begin(), phi.end(), g) != phi.end();
  };
  AffineElt xi = x.inverse();
  for (const auto& beta : phi_u) {
    AffineRoot r = act_conj(x, AffineRoot{beta, minlevel(beta)});
    if (!contains(phi_u, r.beta)) return false;
    if (r.k < minlevel(r.beta)) return false;
  }
  std::vector<std::vector<int>> phi_ubar;
  for (const auto& beta : phi_u) {
    std::vector<int> nb2(beta.size());
    for (std::size_t i = 0; i < beta.size(); ++i) nb2[i] = -beta[i];
    phi_ubar.push_back(std::move(nb2));
  }
  for (const auto& beta : phi_ubar) {
    AffineRoot r = act_conj(xi, AffineRoot{beta, minlevel(beta)});
    if (!contains(phi_ubar, r.beta)) return false;
    if (r.k < minlevel(r.beta)) return false;
  }
  return true;
}

ParabolicM1 ParabolicM1::base(int n) {
  ParabolicM1 p;
  p.n = n;
  for (int i = 1; i < n; ++i) {
    std::vector<int> b(n, 0);
    b[i] = 1;
    p.reduced_roots.insert(b);
    for (int j = 1; j < i; ++j) {
      for (int s : {+1, -1}) {
        std::vector<int> c(n, 0);
        c[i] = 1;
        c[j] = s;
        p.reduced_roots.insert(c);
      }
    }
  }
  return p;
}

ParabolicM1 ParabolicM1::conjugated(const SignedPerm& v) const {
  if (!(v.perm[0] == 0 && v.signs[0] == 1))
    throw std::invalid_argument("ParabolicM1: conjugator must fix the first coordinate");
  ParabolicM1 p;
  p.n = n;
  for (const auto& b : reduced_roots) p.reduced_roots.insert(v.apply_root(b));
  return p;
}

ParabolicM1 ParabolicM1::opposite() const {
  ParabolicM1 p;
  p.n = n;
  for (const auto& b : reduced_roots) {
    std::vector<int> c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = -b[i];
    p.reduced_roots.insert(std::move(c));
  }
  return p;
}

long shared_reduced_roots(const ParabolicM1& p, const ParabolicM1& q) {
  if (p.n != q.n) throw std::invalid_argument("shared_reduced_roots: Levi mismatch");
  long c = 0;
  for (const auto& b : p.reduced_roots) c += q.reduced_roots.count(b);
  return c;
}

std::vector<SignedPerm> enumerate_hyperoctahedral(int n) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<SignedPerm> out;
  std::vector<int> perm = idx;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      SignedPerm u;
      u.perm = perm;
      u.signs.resize(n);
      for (int j = 0; j < n; ++j) u.signs[j] = (mask >> j) & 1 ? -1 : 1;
      out.push_back(std::move(u));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SignedPerm> min_coset_reps(int n, const std::vector<int>& J) {
  CoxeterDescriptor t(WordSystem::TFin, n);
  for (int j : J)
    if (j < 1 || j > n) throw std::out_of_range("min_coset_reps: generator index");
  std::vector<SignedPerm> reps;
  for (const auto& u : enumerate_hyperoctahedral(n)) {
    bool ok = true;
    for (int j : J) {
      if (!root_positive_backarrow(u.apply_root(t.simple_root(j).beta))) {
        ok = false;
        break;
      }
    }
    if (ok) reps.push_back(u);
  }
  return reps;
}

}  // namespace heckeforge
