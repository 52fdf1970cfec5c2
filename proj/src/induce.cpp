#include "heckeforge/induce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <cstdlib>
#include <cstdio>

namespace heckeforge {

UnramChar UnramChar::make(std::shared_ptr<const HeckeAlgebra> alg, std::vector<RatFrac> z) {
  if (static_cast<int>(z.size()) != alg->rank())
    throw std::invalid_argument("UnramChar: need one value per coordinate");
  UnramChar c;
  c.alg = std::move(alg);
  c.z = std::move(z);
  if (c.alg->sign() == AlgSign::Minus) c.z[0] = RatFrac::one(c.alg->coeff_vars());
  for (const auto& zi : c.z)
    if (zi.is_zero()) throw std::invalid_argument("UnramChar: zero coordinate");
  return c;
}

RatFrac UnramChar::value(const std::vector<long>& lambda) const {
  RatFrac r = RatFrac::one(alg->coeff_vars());
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (lambda[i] == 0) continue;
    if (alg->sign() == AlgSign::Minus && i == 0)
      throw std::domain_error("UnramChar: minus-case lattice has no first coordinate");
    r *= z[i].pow(lambda[i]);
  }
  r.normalize();
  return r;
}

UnramChar UnramChar::twisted(const SignedPerm& u) const {
  SignedPerm ui = u.inverse();
  UnramChar c;
  c.alg = alg;
  c.z.assign(z.size(), RatFrac::one(alg->coeff_vars()));
  for (std::size_t i = 0; i < z.size(); ++i) {
    // u^{-1} e_i = ui.signs[i'] e_{...}: read off from the action on e_i.
    std::vector<long> ei(z.size(), 0);
    ei[i] = 1;
    std::vector<long> l = ui.apply(ei);
    for (std::size_t j = 0; j < l.size(); ++j)
      if (l[j] != 0) c.z[i] = z[j].pow(l[j]);
  }
  if (alg->sign() == AlgSign::Minus) c.z[0] = RatFrac::one(alg->coeff_vars());
  return c;
}

std::string UnramChar::key() const {
  std::ostringstream os;
  os << alg->id();
  for (const auto& zi : z) os << "|" << zi.str();
  return os.str();
}

InductionDatum datum_from_char(const std::shared_ptr<const HeckeAlgebra>& alg,
                               const UnramChar& chi) {
  InductionDatum d;
  d.m = 1;
  d.side = IdealSide::Left;
  d.key = chi.key();
  auto vars = alg->coeff_vars();
  auto add = [&](const HeckeElt& h, const RatFrac& val) {
    FMatrix rho(1, 1, vars);
    rho.at(0, 0) = val;
    d.relators.emplace_back(h, rho);
  };
  const int n = alg->rank();
  int start = alg->sign() == AlgSign::Minus ? 1 : 0;
  // Dominant cone generators (suffix vectors) and their inverses keep the
  // relator supports short.
  for (int i = start; i < n; ++i) {
    std::vector<long> lam(n, 0);
    for (int j = i; j < n; ++j) lam[j] = 1;
    add(theta(*alg, lam), chi.value(lam));
    std::vector<long> neg(n, 0);
    for (int j = i; j < n; ++j) neg[j] = -1;
    add(theta(*alg, neg), chi.value(neg));
  }
  // Minus case: the rank-one factor (odd Weil character T'_1 -> q^2 on the
  // abstract Levi algebra) imposes no relator here. Its embedded image lies
  // in the commutant of the lattice, which is the Bernstein part itself, so
  // the embedded minimal Levi algebra of the minus sign is the lattice; the
  // quotient rank over it is the spherical group order, checked by callers.
  return d;
}

struct SaturationContext {
  std::shared_ptr<const HeckeAlgebra> alg;
  int m = 1;
  IdealSide side = IdealSide::Left;
  int radius = 0;  // slice used for reductions (the R+1 level)
  std::map<AffineElt, int> elt_col;     // element -> column rank (length-descending)
  std::vector<AffineElt> col_elt;       // inverse map
  SparseEchelon echelon;
  std::vector<std::pair<AffineElt, int>> basis;  // non-pivot labels in column order
  std::map<int, int> col_to_basis;               // composite column -> basis index

  int composite(const AffineElt& x, int slot) const {
    auto it = elt_col.find(x);
    if (it == elt_col.end()) return -1;
    return it->second * m + slot;
  }
};

namespace {

struct Level {
  std::shared_ptr<SaturationContext> ctx;
};

std::shared_ptr<SaturationContext> build_level(const std::shared_ptr<const HeckeAlgebra>& alg,
                                               const InductionDatum& datum, int radius) {
  auto ctx = std::make_shared<SaturationContext>();
  ctx->alg = alg;
  ctx->m = datum.m;
  ctx->side = datum.side;
  ctx->radius = radius;
  auto ball = enumerate_ball(alg->cox(), radius);
  // Column order: length descending, then element order; pivots prefer long
  // elements so the quotient basis collects the short ones.
  std::sort(ball.begin(), ball.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  ctx->col_elt.reserve(ball.size());
  for (const auto& [x, len] : ball) {
    ctx->elt_col.emplace(x, static_cast<int>(ctx->col_elt.size()));
    ctx->col_elt.push_back(x);
  }
  // Ideal rows. Tensor model: T_x (h ⊗ v − 1 ⊗ ρ(h)v); Hom model (dual):
  // (ξ_j ⊗ h T_x) − Σ_u ρ(h)[j][u] (ξ_u ⊗ T_x).
  auto row_add = [](SparseEchelon::Row& row, int col, const RatFrac& c) {
    auto jt = row.find(col);
    if (jt == row.end()) {
      row.emplace(col, c);
    } else {
      jt->second += c;
      jt->second.normalize();
      if (jt->second.is_zero()) row.erase(jt);
    }
  };
  for (const auto& [x, len] : ball) {
    for (const auto& [h, rho] : datum.relators) {
      HeckeElt xh = datum.side == IdealSide::Left ? mul_basis_left(*alg, x, h)
                                                  : mul_basis_right(h, *alg, x);
      bool inside = true;
      std::vector<std::pair<int, RatFrac>> cells;
      for (const auto& [y, c] : xh.terms()) {
        auto it = ctx->elt_col.find(y);
        if (it == ctx->elt_col.end()) {
          inside = false;
          break;
        }
        cells.emplace_back(it->second, c);
      }
      if (!inside) continue;
      int xcol = ctx->elt_col.at(x);
      for (int vslot = 0; vslot < datum.m; ++vslot) {
        SparseEchelon::Row row;
        for (const auto& [col, c] : cells) row_add(row, col * datum.m + vslot, c);
        for (int uslot = 0; uslot < datum.m; ++uslot) {
          const RatFrac& r = datum.side == IdealSide::Left ? rho.at(uslot, vslot)
                                                           : rho.at(vslot, uslot);
          if (r.is_zero()) continue;
          row_add(row, xcol * datum.m + uslot, -r);
        }
        ctx->echelon.add_row(std::move(row));
      }
    }
  }
  for (int col = 0; col < static_cast<int>(ctx->col_elt.size()); ++col) {
    for (int slot = 0; slot < datum.m; ++slot) {
      int cc = col * datum.m + slot;
      if (!ctx->echelon.has_pivot(cc)) {
        ctx->col_to_basis.emplace(cc, static_cast<int>(ctx->basis.size()));
        ctx->basis.emplace_back(ctx->col_elt[col], slot);
      }
    }
  }
  return ctx;
}

std::vector<RatFrac> coords_from_row(const SaturationContext& ctx, SparseEchelon::Row row) {
  row = ctx.echelon.reduce(std::move(row));
  std::vector<RatFrac> out(ctx.basis.size(), RatFrac::zero(ctx.alg->coeff_vars()));
  for (const auto& [col, c] : row) {
    auto it = ctx.col_to_basis.find(col);
    if (it == ctx.col_to_basis.end())
      throw std::logic_error("saturation: residue outside the quotient basis");
    out[it->second] = c;
  }
  return out;
}

}  // namespace

const FMatrix& FinModule::gen(int i) const {
  auto it = gen_action.find(i);
  if (it == gen_action.end()) throw std::out_of_range("FinModule: generator matrix");
  return it->second;
}

FMatrix FinModule::act_word(const std::vector<int>& word) const {
  FMatrix m = FMatrix::identity(dim, alg->coeff_vars());
  for (int i : word) m = m * gen(i);
  return m;
}

FMatrix FinModule::act_basis(const AffineElt& x) const {
  return act_word(alg->cox().reduced_word(x));
}

FMatrix FinModule::act_elt(const HeckeElt& h) const {
  FMatrix m(dim, dim, alg->coeff_vars());
  for (const auto& [x, c] : h.terms()) m = m + act_basis(x).scaled(c);
  return m;
}

std::vector<RatFrac> FinModule::reduce_to_coords(const HeckeElt& h) const {
  if (!ctx) throw std::logic_error("FinModule: no saturation context");
  SparseEchelon::Row row;
  for (const auto& [y, c] : h.terms()) {
    int col = ctx->composite(y, 0);
    if (col < 0) throw std::domain_error("FinModule: element support exceeds the slice");
    row.emplace(col, c);
  }
  return coords_from_row(*ctx, std::move(row));
}

FMatrix FinModule::transfer_operator(const HeckeElt& u, const FinModule& target) const {
  if (!ctx || !target.ctx || ctx->m != 1 || target.ctx->m != 1)
    throw std::logic_error("transfer_operator: only defined for character-induced modules");
  if (ctx->side != target.ctx->side)
    throw std::logic_error("transfer_operator: mixed ideal sides");
  FMatrix out(target.dim, dim, alg->coeff_vars());
  if (ctx->side == IdealSide::Left) {
    // right multiplication by u on the tensor model
    for (int j = 0; j < dim; ++j) {
      const auto& x = basis_labels[j].first;
      HeckeElt prod = mul(HeckeElt::basis(*alg, x), u);
      auto coords = target.reduce_to_coords(prod);
      for (int i = 0; i < target.dim; ++i) out.at(i, j) = coords[i];
    }
  } else {
    // transpose of left multiplication by u: Q(target) -> Q(this)
    for (int j = 0; j < target.dim; ++j) {
      const auto& y = target.basis_labels[j].first;
      HeckeElt prod = mul(u, HeckeElt::basis(*alg, y));
      auto coords = reduce_to_coords(prod);
      for (int i = 0; i < dim; ++i) out.at(j, i) = coords[i];
    }
  }
  return out;
}

int FinModule::label_index(const AffineElt& x, int slot) const {
  for (std::size_t i = 0; i < basis_labels.size(); ++i)
    if (basis_labels[i].first == x && basis_labels[i].second == slot)
      return static_cast<int>(i);
  return -1;
}

FinModule character_module(std::shared_ptr<const HeckeAlgebra> alg,
                           const std::map<int, RatFrac>& values) {
  if (!check_character(*alg, values))
    throw std::invalid_argument("character_module: assignment violates the relations");
  FinModule m;
  m.alg = std::move(alg);
  m.dim = 1;
  m.basis_labels = {{AffineElt::identity(m.alg->rank()), 0}};
  for (const auto& [i, val] : values) {
    FMatrix a(1, 1, m.alg->coeff_vars());
    a.at(0, 0) = val;
    m.gen_action.emplace(i, a);
  }
  return m;
}

namespace {

void verify_relations(const FinModule& m) {
  const auto& alg = *m.alg;
  auto idx = alg.cox().gen_indices();
  RatFrac one = RatFrac::one(alg.coeff_vars());
  FMatrix id = FMatrix::identity(m.dim, alg.coeff_vars());
  for (int i : idx) {
    const FMatrix& a = m.gen(i);
    FMatrix quad = (a - id.scaled(alg.param(i))) * (a + id);
    if (!quad.is_zero())
      throw std::runtime_error("induce: quadratic relation fails for generator " +
                               std::to_string(i));
  }
  for (std::size_t s = 0; s < idx.size(); ++s) {
    for (std::size_t t = s + 1; t < idx.size(); ++t) {
      int mo = alg.cox().bond_order(idx[s], idx[t]);
      if (mo < 3) continue;
      FMatrix a = id, b = id;
      for (int k = 0; k < mo; ++k) {
        a = a * m.gen(k % 2 ? idx[t] : idx[s]);
        b = b * m.gen(k % 2 ? idx[s] : idx[t]);
      }
      if (!(a == b)) throw std::runtime_error("induce: braid relation fails");
    }
  }
}

void verify_relators(const FinModule& m, const InductionDatum& datum) {
  // The relator elements must act by rho: through right multiplication on
  // the tensor model, through left multiplication on the Hom model.
  for (const auto& [h, rho] : datum.relators) {
    for (int j = 0; j < m.dim; ++j) {
      const auto& [x, slot] = m.basis_labels[j];
      HeckeElt prod = datum.side == IdealSide::Left ? mul(HeckeElt::basis(*m.alg, x), h)
                                                    : mul(h, HeckeElt::basis(*m.alg, x));
      SparseEchelon::Row row;
      bool inside = true;
      for (const auto& [y, c] : prod.terms()) {
        int col = m.ctx->composite(y, slot);
        if (col < 0) {
          inside = false;
          break;
        }
        row.emplace(col, c);
      }
      if (!inside) continue;  // cannot verify this column inside the slice
      auto coords = coords_from_row(*m.ctx, std::move(row));
      std::vector<RatFrac> expected(m.dim, RatFrac::zero(m.alg->coeff_vars()));
      for (int u = 0; u < datum.m; ++u) {
        const RatFrac& r =
            datum.side == IdealSide::Left ? rho.at(u, slot) : rho.at(slot, u);
        if (r.is_zero()) continue;
        int bi = m.label_index(x, u);
        if (bi < 0) throw std::runtime_error("induce: relator action leaves the basis");
        expected[bi] = r;
      }
      for (int i = 0; i < m.dim; ++i)
        if (coords[i] != expected[i])
          throw std::runtime_error("induce: relator does not act by its prescribed matrix");
    }
  }
}

}  // namespace

FinModule induce(std::shared_ptr<const HeckeAlgebra> alg, const InductionDatum& datum,
                 int radius_hint, int max_radius) {
  long relmax = 0;
  for (const auto& [h, rho] : datum.relators)
    relmax = std::max(relmax, h.max_support_length());
  int radius = radius_hint > 0 ? radius_hint : static_cast<int>(relmax) + 4;
  for (; radius <= max_radius; radius += 2) {
    auto lo = build_level(alg, datum, radius);
    auto hi = build_level(alg, datum, radius + 1);
    if (std::getenv("HECKEFORGE_DEBUG_INDUCE")) {
      fprintf(stderr, "[induce] R=%d dims %zu/%zu\n", radius, lo->basis.size(),
              hi->basis.size());
      for (auto& [x, s] : lo->basis) fprintf(stderr, "  lo len=%ld\n", alg->cox().length(x));
      for (auto& [x, s] : hi->basis) fprintf(stderr, "  hi len=%ld\n", alg->cox().length(x));
    }
    if (lo->basis.empty()) continue;
    if (lo->basis != hi->basis) continue;
    // Generator matrices computed in the bigger slice.
    FinModule m;
    m.alg = alg;
    m.dim = static_cast<int>(hi->basis.size());
    m.basis_labels = hi->basis;
    m.ctx = hi;
    bool ok = true;
    for (int g : alg->cox().gen_indices()) {
      FMatrix a(m.dim, m.dim, alg->coeff_vars());
      for (int j = 0; j < m.dim && ok; ++j) {
        const auto& [x, slot] = hi->basis[j];
        HeckeElt tx = datum.side == IdealSide::Left
                          ? mul_gen_left(*alg, g, HeckeElt::basis(*alg, x))
                          : mul_gen_right(HeckeElt::basis(*alg, x), *alg, g);
        SparseEchelon::Row row;
        for (const auto& [y, c] : tx.terms()) {
          int col = hi->composite(y, slot);
          if (col < 0) {
            ok = false;
            break;
          }
          row.emplace(col, c);
        }
        if (!ok) break;
        auto coords = coords_from_row(*hi, std::move(row));
        for (int i = 0; i < m.dim; ++i) {
          if (datum.side == IdealSide::Left)
            a.at(i, j) = coords[i];
          else
            a.at(j, i) = coords[i];  // transpose of right multiplication
        }
      }
      if (!ok) break;
      m.gen_action.emplace(g, std::move(a));
    }
    if (!ok) continue;
    verify_relations(m);
    verify_relators(m, datum);
    return m;
  }
  throw std::runtime_error("induce: dimension did not stabilize within the radius cap");
}

FinModule induce_char(std::shared_ptr<const HeckeAlgebra> alg, const UnramChar& chi,
                      int radius_hint) {
  InductionDatum d = datum_from_char(alg, chi);
  FinModule m = induce(alg, d, radius_hint);
  m.defining_char = chi;
  return m;
}

FMatrix spherical_projector_matrix(const FinModule& m) {
  const auto& alg = *m.alg;
  auto gens = alg.spherical_gens();
  auto group = enumerate_subgroup(alg.cox(), gens);
  LaurentPoly w = poincare_poly(alg.cox(), alg.orthogonal_profile(), gens);
  LaurentPoly wq(alg.coeff_vars());
  for (const auto& [e, c] : w.terms()) {
    LaurentPoly::Exps e2(alg.coeff_vars().size(), 0);
    e2[0] = e[0];
    wq.add_term(e2, c);
  }
  FMatrix acc(m.dim, m.dim, alg.coeff_vars());
  for (const auto& x : group) acc = acc + m.act_basis(x);
  return acc.scaled(RatFrac::one(alg.coeff_vars()) / RatFrac(wq));
}

int spherical_rank(const FinModule& m) { return spherical_projector_matrix(m).rank(); }

std::vector<RatFrac> spherical_vector(const FinModule& m) {
  FMatrix e = spherical_projector_matrix(m);
  int r = e.rank();
  if (r != 1)
    throw std::runtime_error("spherical_vector: projector rank is " + std::to_string(r) +
                             ", not 1 (non-generic character)");
  int ie = m.label_index(AffineElt::identity(m.alg->rank()), 0);
  if (ie < 0) throw std::logic_error("spherical_vector: T_e label missing from basis");
  std::vector<RatFrac> col(m.dim, RatFrac::zero(m.alg->coeff_vars()));
  for (int i = 0; i < m.dim; ++i) col[i] = e.at(i, ie);
  if (col[ie].is_zero())
    throw std::runtime_error("spherical_vector: degenerate normalization at T_e");
  RatFrac inv = col[ie].inverse();
  for (auto& c : col) {
    c *= inv;
    c.normalize();
  }
  return col;
}

std::vector<FMatrix> intertwiner_space(const FinModule& m1, const FinModule& m2) {
  if (!m1.alg->same_presentation(*m2.alg))
    throw std::invalid_argument("intertwiner_space: different algebras");
  const auto vars = m1.alg->coeff_vars();
  const int d1 = m1.dim, d2 = m2.dim;
  auto gens = m1.alg->cox().gen_indices();
  FMatrix sys(static_cast<int>(gens.size()) * d1 * d2, d1 * d2, vars);
  int row = 0;
  for (int g : gens) {
    const FMatrix& a1 = m1.gen(g);
    const FMatrix& a2 = m2.gen(g);
    // (L a1 - a2 L)[i][j] = sum_k L[i][k] a1[k][j] - a2[i][k] L[k][j]
    for (int i = 0; i < d2; ++i) {
      for (int j = 0; j < d1; ++j) {
        for (int k = 0; k < d1; ++k) sys.at(row, i * d1 + k) += a1.at(k, j);
        for (int k = 0; k < d2; ++k) sys.at(row, k * d1 + j) -= a2.at(i, k);
        ++row;
      }
    }
  }
  auto null = sys.nullspace();
  std::vector<FMatrix> out;
  for (const auto& v : null) {
    FMatrix L(d2, d1, vars);
    for (int i = 0; i < d2; ++i)
      for (int j = 0; j < d1; ++j) L.at(i, j) = v[i * d1 + j];
    out.push_back(std::move(L));
  }
  return out;
}

LeviRestriction jacquet_restrict(const FinModule& m, const LeviDatum& levi) {
  LeviRestriction out;
  const auto& alg = *m.alg;
  const int n = alg.rank();
  int start = alg.sign() == AlgSign::Minus ? 1 : 0;
  for (int i = start; i < n; ++i) {
    for (int s : {+1, -1}) {
      std::vector<long> lam(n, 0);
      lam[i] = s;
      HeckeElt th = theta(alg, lam);
      out.pairs.emplace_back(th, m.act_elt(th));
    }
  }
  // Finite generators of the Levi: symplectic-block reflections.
  if (levi.blocks.nb >= 1 && alg.sign() == AlgSign::Minus) {
    HeckeElt t1 = HeckeElt::basis(alg, alg.cox().generator(1));
    out.pairs.emplace_back(t1, m.act_elt(t1));
  }
  if (levi.blocks.nb >= 1 && alg.sign() == AlgSign::Plus) {
    // block reflections: s_0 and the finite flip of coordinate nb... only the
    // affine generator s_0 and flips inside the block are Levi-internal; for
    // the rank-one block this is {s_0, flip_1}.
    HeckeElt t0 = HeckeElt::basis(alg, alg.cox().generator(0));
    out.pairs.emplace_back(t0, m.act_elt(t0));
    CoxeterDescriptor tsys(WordSystem::TFin, n);
    for (int b = 1; b <= levi.blocks.nb; ++b) {
      // flip of coordinate b lies in the block
      SignedPerm fl = SignedPerm::identity(n);
      fl.signs[b - 1] = -1;
      AffineElt x = AffineElt::from_finite(fl);
      out.pairs.emplace_back(HeckeElt::basis(alg, x), m.act_basis(x));
    }
    // transpositions inside the block
    for (int b = 2; b <= levi.blocks.nb; ++b) {
      SignedPerm tr = SignedPerm::identity(n);
      std::swap(tr.perm[b - 2], tr.perm[b - 1]);
      AffineElt x = AffineElt::from_finite(tr);
      out.pairs.emplace_back(HeckeElt::basis(alg, x), m.act_basis(x));
    }
  }
  // GL-block transpositions (sizes >= 2).
  int pos = levi.blocks.nb;
  for (int sz : levi.blocks.gl) {
    for (int k = pos + 1; k < pos + sz; ++k) {
      SignedPerm tr = SignedPerm::identity(n);
      std::swap(tr.perm[k - 1], tr.perm[k]);
      AffineElt x = AffineElt::from_finite(tr);
      out.pairs.emplace_back(HeckeElt::basis(alg, x), m.act_basis(x));
    }
    pos += sz;
  }
  return out;
}

}  // namespace heckeforge
