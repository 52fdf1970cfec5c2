#ifndef HECKEFORGE_INDUCE_HPP
#define HECKEFORGE_INDUCE_HPP

#include <memory>
#include <optional>

#include "heckeforge/hecke.hpp"
#include "heckeforge/module.hpp"

namespace heckeforge {

// Unramified character of the minimal Levi, stored by its values
// z_i = chi(eps_i-check) on the cocharacter basis. In the minus case the
// first coordinate carries no lattice (z_1 fixed to 1) and the rank-one
// factor acts through the odd Weil character T'_1 -> q^2.
struct UnramChar {
  std::shared_ptr<const HeckeAlgebra> alg;
  std::vector<RatFrac> z;

  static UnramChar make(std::shared_ptr<const HeckeAlgebra> alg, std::vector<RatFrac> z);
  RatFrac value(const std::vector<long>& lambda) const;
  UnramChar twisted(const SignedPerm& u) const;  // (u chi)(l) = chi(u^{-1} l)
  std::string key() const;
};

// Inducing datum: relator pairs (h, rho(h)) inside the big algebra; dim m of
// the inducing space. The plus algebras quotient by the left multiples of
// (h - rho(h)) (tensor model); the minus algebras by the right multiples,
// realizing the module on the dual (Hom model) since the rank-one factor
// relator makes the left ideal collapse.
enum class IdealSide { Left, Right };

struct InductionDatum {
  int m = 1;
  IdealSide side = IdealSide::Left;
  std::vector<std::pair<HeckeElt, FMatrix>> relators;
  std::string key;
};

InductionDatum datum_from_char(const std::shared_ptr<const HeckeAlgebra>& alg,
                               const UnramChar& chi);

// Saturation context kept by modules so arbitrary elements (with support in
// the working slice) can be reduced to coordinates later.
struct SaturationContext;

// Finite-dimensional module: generator action matrices on the surviving
// basis labels (element, inducing-slot) of the saturation quotient.
class FinModule {
public:
  std::shared_ptr<const HeckeAlgebra> alg;
  int dim = 0;
  std::map<int, FMatrix> gen_action;
  std::vector<std::pair<AffineElt, int>> basis_labels;
  std::optional<UnramChar> defining_char;
  std::shared_ptr<const SaturationContext> ctx;

  const FMatrix& gen(int i) const;
  FMatrix act_word(const std::vector<int>& word) const;
  FMatrix act_basis(const AffineElt& x) const;
  FMatrix act_elt(const HeckeElt& h) const;

  // Class of h in the quotient slice (needs ctx; support must fit the slice).
  std::vector<RatFrac> reduce_to_coords(const HeckeElt& h) const;
  // Matrix M(this) -> M(target) of the canonical operator attached to u:
  // right multiplication by u on the tensor model, the transpose of left
  // multiplication by u on the Hom model. Well-defined as a module map only
  // when u normalizes the defining ideals; callers verify intertwining.
  FMatrix transfer_operator(const HeckeElt& u, const FinModule& target) const;

  int label_index(const AffineElt& x, int slot = 0) const;  // -1 when absent
};

// Explicit character module (dim 1) from generator values.
FinModule character_module(std::shared_ptr<const HeckeAlgebra> alg,
                           const std::map<int, RatFrac>& values);

// Ideal-saturation induction. Stabilizes the quotient dimension across the
// slice radius (auto-increased up to max_radius), builds generator matrices
// and verifies braid/quadratic relations and the relator actions.
FinModule induce(std::shared_ptr<const HeckeAlgebra> alg, const InductionDatum& datum,
                 int radius_hint = -1, int max_radius = 26);
FinModule induce_char(std::shared_ptr<const HeckeAlgebra> alg, const UnramChar& chi,
                      int radius_hint = -1);

// e^{+-}-image: rank must be 1 (generic chi); returns the vector normalized
// to coordinate 1 at the label T_e.
std::vector<RatFrac> spherical_vector(const FinModule& m);
FMatrix spherical_projector_matrix(const FinModule& m);
int spherical_rank(const FinModule& m);

// Basis of Hom_algebra(M1, M2).
std::vector<FMatrix> intertwiner_space(const FinModule& m1, const FinModule& m2);

// Action matrices of the t_nor-images of Levi generators on M: theta's for
// the lattice, T_w for the Levi's finite generators.
struct LeviRestriction {
  std::vector<std::pair<HeckeElt, FMatrix>> pairs;  // (embedded element, action)
};
LeviRestriction jacquet_restrict(const FinModule& m, const LeviDatum& levi);

}  // namespace heckeforge

#endif
