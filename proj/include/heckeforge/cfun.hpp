#ifndef HECKEFORGE_CFUN_HPP
#define HECKEFORGE_CFUN_HPP

#include "heckeforge/induce.hpp"

namespace heckeforge {

enum class CFunMode { ClosedForm, Numeric };

// Coroot evaluation y attached to one B<- simple reflection: y = chi(2 eps_1)
// for the long letter t_1 (resp. chi(2 eps_2) for t'_2), y = chi(eps_i -
// eps_{i-1}) for the short letters.
RatFrac letter_coroot_value(const HeckeAlgebra& alg, int letter, const UnramChar& chi);

// Rank-one factor (1 - q^{-1} y)/(1 - y); throws on a pole (y = 1).
RatFrac rank_one_c_factor(const HeckeAlgebra& alg, const RatFrac& y);

// Gindikin-Karpelevich product over a reduced word in the finite B<- system,
// in cocycle order: c(w, chi) = prod_j c(t_{i_j}, t_{i_{j+1}} ... t_{i_l} chi).
RatFrac c_function_closed(const HeckeAlgebra& alg, const std::vector<int>& tword,
                          const UnramChar& chi);

// Cache of induced principal-series modules keyed by the character.
class ModuleCache {
public:
  explicit ModuleCache(std::shared_ptr<const HeckeAlgebra> alg) : alg_(std::move(alg)) {}
  const FinModule& get(const UnramChar& chi);
  const std::shared_ptr<const HeckeAlgebra>& alg() const { return alg_; }

private:
  std::shared_ptr<const HeckeAlgebra> alg_;
  std::map<std::string, FinModule> cache_;
};

// Normalized rank-one intertwiner M(chi) -> M(t_i chi) for the plus sign:
// the Bernstein-type operator attached to T_{t_i} with its theta-correction,
// scaled once by the rank-one calibration (1 - q^{-1}y)/(1 - qy) so the
// spherical eigenvalue is the closed-form factor. Verified to intertwine.
FMatrix letter_operator(ModuleCache& cache, int letter, const UnramChar& chi);

// Spherical eigenvalue of the chained intertwiner for the full word.
RatFrac c_function_numeric(ModuleCache& cache, const std::vector<int>& tword,
                           const UnramChar& chi);

RatFrac c_function(ModuleCache& cache, const std::vector<int>& tword, const UnramChar& chi,
                   CFunMode mode);

// Flip count of the word's underlying signed permutation.
int word_flip_count(const HeckeAlgebra& alg, const std::vector<int>& tword);

// d(w,chi) = |2|^{t(w)/2} c(w,chi) with |2|^{1/2} = v^{-e}; the alternate
// minus-side convention carries the extra (-q^{-1})^{t(w)}.
RatFrac matched_d_function(ModuleCache& cache, const std::vector<int>& tword,
                           const UnramChar& chi, int e_val, CFunMode mode,
                           bool alternate_convention = false);

// Minus-case rank-one intertwiner M(chi) -> M(t'_2 chi) at n = 2: the
// operator T'_2 + a(chi) with a solved from the intertwining condition
// (closed form unknown; nothing is asserted about its eigenvalue here).
FMatrix minus_letter_operator(ModuleCache& cache, const UnramChar& chi, RatFrac* a_out = nullptr);

// Spherical eigenvalue of minus_letter_operator at sample points z,
// reconstructed as a rational function of z (ring {v, z}), constant term
// normalized to 1.
RatFrac c_function_minus_rank1(ModuleCache& cache, const std::vector<BigRational>& samples,
                               int deg_bound = 2);

struct ScanPoint {
  BigRational z;
  int dim = 0;
  int endo_dim = 0;
  bool reducible = false;
};

// One-parameter family scan: chi_z has last coordinate z (others fixed at
// base); flags reducibility via endomorphism dimension and invariant-subspace
// closures seeded by generator eigenvectors.
std::vector<ScanPoint> reducibility_scan(ModuleCache& cache, const UnramChar& base,
                                         const std::vector<BigRational>& grid);

bool module_is_reducible(const FinModule& m, int* endo_dim_out = nullptr);

}  // namespace heckeforge

#endif
