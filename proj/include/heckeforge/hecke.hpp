#ifndef HECKEFORGE_HECKE_HPP
#define HECKEFORGE_HECKE_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "heckeforge/ratfrac.hpp"
#include "heckeforge/weyl.hpp"

namespace heckeforge {

enum class AlgSign { Plus, Minus };
enum class Grading { Metaplectic, Orthogonal };

// One of the paper's family of two-block Hecke algebras in the T_w basis.
// The plus pair (H_psi^+, H^+) shares the affine C~n presentation with
// parameters (1, q, ..., q); the minus pair (H_psi^-, H^-) the affine
// C~(n-1) presentation with parameters (q^2, q, ..., q). The two members of
// each pair differ only in which weight profile is active: that grading swap
// is the Takeda-Wood identification at descriptor level.
class HeckeAlgebra {
public:
  HeckeAlgebra(AlgSign sign, int n, Grading grading = Grading::Orthogonal,
               std::vector<std::string> coeff_vars = {"v"});

  AlgSign sign() const { return sign_; }
  int rank() const { return n_; }
  Grading grading() const { return grading_; }
  const CoxeterDescriptor& cox() const { return cox_; }
  const std::vector<std::string>& coeff_vars() const { return vars_; }

  // q-exponent of the parameter of generator i (p_i = q^{param_exp}).
  int param_exp(int i) const;
  RatFrac param(int i) const;      // p_i as a RatFrac
  RatFrac q() const;               // v^2
  RatFrac v() const;

  // Active / swapped weight profile names ("l"/"l0" resp. "lprime"/"l2").
  std::string active_profile() const;
  std::string orthogonal_profile() const;
  std::string metaplectic_profile() const;

  // The Takeda-Wood regrading: same presentation, other grading.
  HeckeAlgebra tw_swapped() const;

  // Spherical subgroup generators (Omega_0 resp. Omega'_0).
  std::vector<int> spherical_gens() const;

  bool same_presentation(const HeckeAlgebra& o) const {
    return sign_ == o.sign_ && n_ == o.n_ && vars_ == o.vars_;
  }
  std::string id() const;

private:
  AlgSign sign_;
  int n_;
  Grading grading_;
  std::vector<std::string> vars_;
  CoxeterDescriptor cox_;
};

// Finite sum of T_w with RatFrac coefficients over a fixed algebra.
class HeckeElt {
public:
  HeckeElt() = default;
  explicit HeckeElt(const HeckeAlgebra* alg) : alg_(alg) {}

  static HeckeElt unit(const HeckeAlgebra& alg);
  static HeckeElt basis(const HeckeAlgebra& alg, const AffineElt& x);

  const HeckeAlgebra* algebra() const { return alg_; }
  const std::map<AffineElt, RatFrac>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const AffineElt& x, const RatFrac& c);
  RatFrac coeff(const AffineElt& x) const;

  HeckeElt operator-() const;
  friend HeckeElt operator+(const HeckeElt& a, const HeckeElt& b);
  friend HeckeElt operator-(const HeckeElt& a, const HeckeElt& b);
  HeckeElt scaled(const RatFrac& c) const;
  friend bool operator==(const HeckeElt& a, const HeckeElt& b);
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

  long max_support_length() const;

private:
  const HeckeAlgebra* alg_ = nullptr;
  std::map<AffineElt, RatFrac> terms_;
};

// T-basis products. mul_gen_* apply one generator on the stated side.
HeckeElt mul_gen_left(const HeckeAlgebra& alg, int i, const HeckeElt& b);
HeckeElt mul_gen_right(const HeckeElt& a, const HeckeAlgebra& alg, int i);
HeckeElt mul_basis_left(const HeckeAlgebra& alg, const AffineElt& x, const HeckeElt& b);
HeckeElt mul_basis_right(const HeckeElt& a, const HeckeAlgebra& alg, const AffineElt& x);
HeckeElt mul(const HeckeElt& a, const HeckeElt& b);

// T_x^{-1} along a reduced word; T_s^{-1} = p^{-1} T_s + (p^{-1} - 1) T_e.
HeckeElt invert_basis(const HeckeAlgebra& alg, const AffineElt& x);

// Anti-automorphism T_w -> T_{w^{-1}}.
HeckeElt star(const HeckeElt& a);

// Diagonal graded pairing (T_v | T_w) = delta_{v,w} q^{L(w)} with L the
// algebra's active grading, extended bilinearly.
RatFrac trace_form(const HeckeElt& a, const HeckeElt& b);
// Coefficient of T_e in star(a) * b (the intrinsic convolution form; equals
// trace_form under the orthogonal grading).
RatFrac te_pairing(const HeckeElt& a, const HeckeElt& b);

// Spherical idempotent e^{+-}: Poincare-normalized sum over the spherical
// subgroup.
HeckeElt spherical_idempotent(const HeckeAlgebra& alg);

// Reverse-standard Levi datum for the embeddings.
struct LeviDatum {
  BlockLevi blocks;
  bool opposite = false;  // which of the two opposite parabolics is "P"

  static LeviDatum minimal(const HeckeAlgebra& alg);
};

// delta_P(t_lambda)^{1/2} as the exponent D with delta^{1/2} = v^{-D};
// computed from weighted lengths of a dominant decomposition and extended
// additively. For group elements (lambda, u) of the Levi, delta depends on
// lambda only.
long modulus_half_exponent(const LeviDatum& levi, const HeckeAlgebra& alg,
                           const std::vector<long>& lambda);
RatFrac modulus(const LeviDatum& levi, const HeckeAlgebra& alg, const std::vector<long>& lambda);

// Bernstein-type commuting family theta_lambda for the minimal Levi.
HeckeElt theta(const HeckeAlgebra& alg, const std::vector<long>& lambda);

// Normalized Levi embedding on basis elements: P-positive x maps to
// delta_P(x)^{1/2} T_x; non-positive x are corrected by a central positive z.
HeckeElt tnor_embed(const LeviDatum& levi, const HeckeAlgebra& alg, const AffineElt& x,
                    int search_radius = 16);

// Does the generator assignment extend to an algebra character?
bool check_character(const HeckeAlgebra& alg, const std::map<int, RatFrac>& values);

}  // namespace heckeforge

#endif
