#include "heckeforge/cfun.hpp"

#include <stdexcept>

namespace heckeforge {

namespace {

CoxeterDescriptor finite_system(const HeckeAlgebra& alg) {
  return CoxeterDescriptor(
      alg.sign() == AlgSign::Plus ? WordSystem::TFin : WordSystem::TPrimeFin, alg.rank());
}

}  // namespace

RatFrac letter_coroot_value(const HeckeAlgebra& alg, int letter, const UnramChar& chi) {
  const int n = alg.rank();
  std::vector<long> gamma(n, 0);
  if (alg.sign() == AlgSign::Plus) {
    if (letter == 1) {
      gamma[0] = 2;
    } else {
      gamma[letter - 1] = 1;
      gamma[letter - 2] = -1;
    }
  } else {
    if (letter == 2) {
      gamma[1] = 2;
    } else {
      gamma[letter - 1] = 1;
      gamma[letter - 2] = -1;
    }
  }
  RatFrac y = chi.value(gamma);
  y.normalize();
  return y;
}

RatFrac rank_one_c_factor(const HeckeAlgebra& alg, const RatFrac& y) {
  RatFrac one = RatFrac::one(y.vars());
  RatFrac qinv = RatFrac::variable(y.vars(), 0, -2);
  RatFrac den = one - y;
  if (den.is_zero()) throw std::domain_error("c-function: pole of a rank-one factor (y = 1)");
  return (one - qinv * y) / den;
}

RatFrac c_function_closed(const HeckeAlgebra& alg, const std::vector<int>& tword,
                          const UnramChar& chi) {
  CoxeterDescriptor fin = finite_system(alg);
  // Partial twists: chi_j = t_{i_{j+1}} ... t_{i_l} chi.
  RatFrac acc = RatFrac::one(chi.alg->coeff_vars());
  UnramChar cur = chi;
  for (auto it = tword.rbegin(); it != tword.rend(); ++it) {
    RatFrac y = letter_coroot_value(alg, *it, cur);
    acc = acc * rank_one_c_factor(alg, y);
    cur = cur.twisted(fin.generator(*it).fin);
  }
  acc.normalize();
  return acc;
}

const FinModule& ModuleCache::get(const UnramChar& chi) {
  auto key = chi.key();
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  FinModule m = induce_char(alg_, chi);
  return cache_.emplace(key, std::move(m)).first->second;
}

namespace {

// Solve (R + a I) A_g = A'_g (R + a I) for the scalar a; unique at generic
// characters.
RatFrac solve_affine_correction(const FMatrix& R, const FinModule& src, const FinModule& dst,
                                const char* who) {
  RatFrac a = RatFrac::zero(src.alg->coeff_vars());
  bool pinned = false;
  for (int g : src.alg->cox().gen_indices()) {
    FMatrix lhs = src.gen(g) - dst.gen(g);          // coefficient of a
    FMatrix rhs = dst.gen(g) * R - R * src.gen(g);  // constant side
    for (int i = 0; i < src.dim; ++i) {
      for (int j = 0; j < src.dim; ++j) {
        if (lhs.at(i, j).is_zero()) {
          if (!rhs.at(i, j).is_zero())
            throw std::runtime_error(std::string(who) + ": no affine intertwiner exists");
          continue;
        }
        RatFrac cand = rhs.at(i, j) / lhs.at(i, j);
        cand.normalize();
        if (!pinned) {
          a = cand;
          pinned = true;
        } else if (!(a == cand)) {
          throw std::runtime_error(std::string(who) + ": inconsistent intertwining system");
        }
      }
    }
  }
  if (!pinned)
    throw std::runtime_error(std::string(who) + ": degenerate character (w chi = chi)");
  return a;
}

void assert_intertwines(const FMatrix& L, const FinModule& src, const FinModule& dst,
                        const char* who) {
  for (int g : src.alg->cox().gen_indices()) {
    if (!(L * src.gen(g) == dst.gen(g) * L))
      throw std::runtime_error(std::string(who) + ": operator does not intertwine");
  }
}

RatFrac spherical_eigenvalue(const FMatrix& L, const FinModule& src, const FinModule& dst) {
  auto s = spherical_vector(src);
  auto sd = spherical_vector(dst);
  auto im = L.apply(s);
  // im must be a scalar multiple of sd.
  int anchor = -1;
  for (int i = 0; i < dst.dim; ++i)
    if (!sd[i].is_zero()) {
      anchor = i;
      break;
    }
  RatFrac lam = im[anchor] / sd[anchor];
  for (int i = 0; i < dst.dim; ++i) {
    if (!(im[i] == lam * sd[i]))
      throw std::runtime_error("spherical_eigenvalue: image is not spherical");
  }
  lam.normalize();
  return lam;
}

}  // namespace

namespace {

// Bernstein-type intertwiner attached to one simple reflection of the
// algebra's own Coxeter system: right multiplication by T_s plus the solved
// theta-correction scalar.
FMatrix tau_operator(ModuleCache& cache, const AffineElt& s, const UnramChar& chi,
                     const UnramChar& chi2) {
  const auto& alg = *cache.alg();
  const FinModule& src = cache.get(chi);
  const FinModule& dst = cache.get(chi2);
  FMatrix R = src.transfer_operator(HeckeElt::basis(alg, s), dst);
  RatFrac a = solve_affine_correction(R, src, dst, "tau_operator");
  FMatrix L = R + FMatrix::identity(src.dim, alg.coeff_vars()).scaled(a);
  assert_intertwines(L, src, dst, "tau_operator");
  return L;
}

// Predicted tau eigenvalue (1 - q y)/(1 - y); derived in the rank-one case
// and cross-checked against the closed form by the test suites.
RatFrac tau_eigen_pred(const HeckeAlgebra& alg, const RatFrac& y) {
  RatFrac one = RatFrac::one(y.vars());
  RatFrac den = one - y;
  if (den.is_zero()) throw std::domain_error("tau eigenvalue: pole (y = 1)");
  return (one - alg.q() * y) / den;
}

// B-> positive roots of C_n sent negative by u, as coweight vectors (long
// roots doubled).
std::vector<std::vector<long>> arrow_inversions(int n, const SignedPerm& u) {
  std::vector<std::vector<long>> out;
  auto push_if = [&](std::vector<int> beta) {
    if (!root_positive_arrow(u.apply_root(beta))) {
      std::vector<long> v(beta.begin(), beta.end());
      out.push_back(std::move(v));
    }
  };
  for (int i = 0; i < n; ++i) {
    std::vector<int> b(n, 0);
    b[i] = 2;
    push_if(b);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int s : {+1, -1}) {
        std::vector<int> b(n, 0);
        b[i] = 1;
        b[j] = s;
        push_if(b);
      }
  return out;
}

}  // namespace

FMatrix letter_operator(ModuleCache& cache, int letter, const UnramChar& chi) {
  const auto& alg = *cache.alg();
  if (alg.sign() != AlgSign::Plus)
    throw std::invalid_argument("letter_operator: plus sign only; use minus_letter_operator");
  CoxeterDescriptor fin = finite_system(alg);
  AffineElt t = fin.generator(letter);
  // Chain of Bernstein operators over a reduced word of t in the algebra's
  // own (B->-simple) finite generators.
  std::vector<int> sword = alg.cox().reduced_word(t);
  UnramChar cur = chi;
  const FinModule& src = cache.get(chi);
  FMatrix C = FMatrix::identity(src.dim, alg.coeff_vars());
  for (auto it = sword.rbegin(); it != sword.rend(); ++it) {
    UnramChar next = cur.twisted(alg.cox().generator(*it).fin);
    C = tau_operator(cache, alg.cox().generator(*it), cur, next) * C;
    cur = next;
  }
  // Recalibrate from the tau normalization to the Gindikin-Karpelevich one:
  // the chain's predicted eigenvalue is the product of (1-qy)/(1-y) over the
  // B->-inversions of t, the target is the closed-form letter factor.
  RatFrac y = letter_coroot_value(alg, letter, chi);
  RatFrac pred = RatFrac::one(alg.coeff_vars());
  for (const auto& beta : arrow_inversions(alg.rank(), t.fin))
    pred = pred * tau_eigen_pred(alg, chi.value(beta));
  RatFrac b = rank_one_c_factor(alg, y) / pred;
  b.normalize();
  FMatrix L = C.scaled(b);
  assert_intertwines(L, src, cache.get(cur), "letter_operator");
  return L;
}

RatFrac c_function_numeric(ModuleCache& cache, const std::vector<int>& tword,
                           const UnramChar& chi) {
  const auto& alg = *cache.alg();
  CoxeterDescriptor fin = finite_system(alg);
  if (alg.sign() == AlgSign::Minus) {
    // chain of minus letters; only t'_2 carries a nontrivial factor at rank 2
    UnramChar cur = chi;
    FMatrix C = FMatrix::identity(cache.get(chi).dim, alg.coeff_vars());
    const FinModule* src = &cache.get(chi);
    for (auto it = tword.rbegin(); it != tword.rend(); ++it) {
      FMatrix L = *it == 2 ? minus_letter_operator(cache, cur)
                           : letter_operator(cache, *it, cur);
      C = L * C;
      cur = cur.twisted(fin.generator(*it).fin);
    }
    const FinModule& dst = cache.get(cur);
    return spherical_eigenvalue(C, *src, dst);
  }
  UnramChar cur = chi;
  const FinModule& src = cache.get(chi);
  FMatrix C = FMatrix::identity(src.dim, alg.coeff_vars());
  for (auto it = tword.rbegin(); it != tword.rend(); ++it) {
    FMatrix L = letter_operator(cache, *it, cur);
    C = L * C;
    cur = cur.twisted(fin.generator(*it).fin);
  }
  const FinModule& dst = cache.get(cur);
  return spherical_eigenvalue(C, src, dst);
}

RatFrac c_function(ModuleCache& cache, const std::vector<int>& tword, const UnramChar& chi,
                   CFunMode mode) {
  if (mode == CFunMode::ClosedForm) return c_function_closed(*cache.alg(), tword, chi);
  return c_function_numeric(cache, tword, chi);
}

int word_flip_count(const HeckeAlgebra& alg, const std::vector<int>& tword) {
  CoxeterDescriptor fin = finite_system(alg);
  return fin.word_to_elt(tword).fin.flip_count();
}

RatFrac matched_d_function(ModuleCache& cache, const std::vector<int>& tword,
                           const UnramChar& chi, int e_val, CFunMode mode,
                           bool alternate_convention) {
  const auto& alg = *cache.alg();
  int t = word_flip_count(alg, tword);
  RatFrac c = c_function(cache, tword, chi, mode);
  RatFrac scale = RatFrac::variable(alg.coeff_vars(), 0, -e_val * t);  // |2|^{t/2} = v^{-e t}
  if (alternate_convention) {
    RatFrac mq = -alg.q().inverse();
    scale = scale * mq.pow(t);
  }
  return scale * c;
}

FMatrix minus_letter_operator(ModuleCache& cache, const UnramChar& chi, RatFrac* a_out) {
  const auto& alg = *cache.alg();
  if (alg.sign() != AlgSign::Minus || alg.rank() != 2)
    throw std::invalid_argument("minus_letter_operator: rank-2 minus configuration only");
  CoxeterDescriptor fin = finite_system(alg);
  const FinModule& src = cache.get(chi);
  UnramChar chi2 = chi.twisted(fin.generator(2).fin);
  const FinModule& dst = cache.get(chi2);
  FMatrix R = src.transfer_operator(HeckeElt::basis(alg, fin.generator(2)), dst);
  RatFrac a = solve_affine_correction(R, src, dst, "minus_letter_operator");
  FMatrix L = R + FMatrix::identity(src.dim, alg.coeff_vars()).scaled(a);
  assert_intertwines(L, src, dst, "minus_letter_operator");
  if (a_out) *a_out = a;
  return L;
}

RatFrac c_function_minus_rank1(ModuleCache& cache, const std::vector<BigRational>& samples,
                               int deg_bound) {
  const auto& alg = *cache.alg();
  if (alg.sign() != AlgSign::Minus || alg.rank() != 2)
    throw std::invalid_argument("c_function_minus_rank1: rank-2 minus configuration only");
  std::vector<std::string> vz{"v", "z"};
  std::vector<std::pair<BigRational, RatFrac>> pts;
  for (const auto& z0 : samples) {
    UnramChar chi = UnramChar::make(cache.alg(),
                                    {RatFrac::one(alg.coeff_vars()),
                                     RatFrac::constant(alg.coeff_vars(), z0)});
    const FinModule& src = cache.get(chi);
    CoxeterDescriptor fin = finite_system(alg);
    const FinModule& dst = cache.get(chi.twisted(fin.generator(2).fin));
    FMatrix L = minus_letter_operator(cache, chi);
    RatFrac lam = spherical_eigenvalue(L, src, dst);
    pts.emplace_back(z0, lam.promoted(vz));
  }
  RatFrac rec = rf_reconstruct(1, pts, deg_bound, deg_bound);
  // Constant term normalized to 1.
  RatFrac at0 = rec.specialized({{1, BigRational(0)}});
  if (at0.is_zero())
    throw std::runtime_error("c_function_minus_rank1: reconstruction vanishes at z = 0");
  RatFrac out = rec / at0;
  out.normalize();
  return out;
}

bool module_is_reducible(const FinModule& m, int* endo_dim_out) {
  int endo = static_cast<int>(intertwiner_space(m, m).size());
  if (endo_dim_out) *endo_dim_out = endo;
  if (endo > 1) return true;
  // Invariant-subspace search seeded by generator eigenvectors.
  const auto vars = m.alg->coeff_vars();
  FMatrix id = FMatrix::identity(m.dim, vars);
  std::vector<std::vector<RatFrac>> seeds;
  for (int g : m.alg->cox().gen_indices()) {
    for (const RatFrac& ev : {m.alg->param(g), -RatFrac::one(vars)}) {
      FMatrix shifted = m.gen(g) - id.scaled(ev);
      for (auto& v : shifted.nullspace()) seeds.push_back(std::move(v));
    }
  }
  for (const auto& seed : seeds) {
    // Spin up the closure of seed under the generator matrices.
    std::vector<std::vector<RatFrac>> span{seed};
    FMatrix spanm(1, m.dim, vars);
    for (int j = 0; j < m.dim; ++j) spanm.at(0, j) = seed[j];
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<RatFrac>> next;
      for (const auto& v : span)
        for (int g : m.alg->cox().gen_indices()) next.push_back(m.gen(g).apply(v));
      for (const auto& v : next) {
        // Does v enlarge the span?
        FMatrix test(static_cast<int>(span.size()) + 1, m.dim, vars);
        for (std::size_t r = 0; r < span.size(); ++r)
          for (int j = 0; j < m.dim; ++j) test.at(static_cast<int>(r), j) = span[r][j];
        for (int j = 0; j < m.dim; ++j) test.at(static_cast<int>(span.size()), j) = v[j];
        if (test.rank() > static_cast<int>(span.size())) {
          span.push_back(v);
          grew = true;
        }
      }
      if (static_cast<int>(span.size()) >= m.dim) break;
    }
    if (static_cast<int>(span.size()) < m.dim) return true;  // proper nonzero submodule
  }
  return false;
}

std::vector<ScanPoint> reducibility_scan(ModuleCache& cache, const UnramChar& base,
                                         const std::vector<BigRational>& grid) {
  const auto& alg = *cache.alg();
  std::vector<ScanPoint> out;
  for (const auto& z0 : grid) {
    std::vector<RatFrac> z = base.z;
    z.back() = RatFrac::constant(alg.coeff_vars(), z0);
    UnramChar chi = UnramChar::make(cache.alg(), z);
    ScanPoint p;
    p.z = z0;
    const FinModule& m = cache.get(chi);
    p.dim = m.dim;
    p.reducible = module_is_reducible(m, &p.endo_dim);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace heckeforge
