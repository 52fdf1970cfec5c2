#ifndef HECKEFORGE_WEYL_HPP
#define HECKEFORGE_WEYL_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "heckeforge/laurent.hpp"

namespace heckeforge {

// Signed permutation of {1..n}: the linear map e_j -> signs[j] * e_{perm[j]}
// (0-based storage). Composition matches the hyperoctahedral action on Z^n.
struct SignedPerm {
  std::vector<int> perm;   // images, 0-based
  std::vector<int> signs;  // +1 / -1 per source index

  static SignedPerm identity(int n);
  int rank() const { return static_cast<int>(perm.size()); }
  bool is_identity() const;

  SignedPerm compose(const SignedPerm& rhs) const;  // this ∘ rhs
  SignedPerm inverse() const;

  std::vector<long> apply(const std::vector<long>& x) const;
  std::vector<int> apply_root(const std::vector<int>& beta) const;

  int flip_count() const;

  friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
    return a.perm == b.perm && a.signs == b.signs;
  }
  friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.signs < b.signs;
  }
};

// Element (trans, fin) of the affine Weyl group of type C~n acting on R^n by
// x -> fin(x) + trans. Group law (l,u)(m,w) = (l + u m, u w).
struct AffineElt {
  std::vector<long> trans;
  SignedPerm fin;

  static AffineElt identity(int n);
  static AffineElt translation(const std::vector<long>& lambda);
  static AffineElt from_finite(const SignedPerm& u);

  int rank() const { return fin.rank(); }
  bool is_identity() const;
  AffineElt mul(const AffineElt& rhs) const;
  AffineElt inverse() const;

  friend bool operator==(const AffineElt& a, const AffineElt& b) {
    return a.trans == b.trans && a.fin == b.fin;
  }
  friend bool operator!=(const AffineElt& a, const AffineElt& b) { return !(a == b); }
  friend bool operator<(const AffineElt& a, const AffineElt& b) {
    if (a.trans != b.trans) return a.trans < b.trans;
    return a.fin < b.fin;
  }
};

// Affine root (beta, k) <-> the affine function beta(x) + k, with beta a root
// of type C_n stored as an integer vector (+-e_i +- e_j or +-2 e_i).
struct AffineRoot {
  std::vector<int> beta;
  long k = 0;

  // Positive iff k > 0, or k = 0 and beta positive for the standard (B->)
  // ordering: first nonzero entry > 0.
  bool positive() const;
  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.beta == b.beta && a.k == b.k;
  }
};

bool root_positive_arrow(const std::vector<int>& beta);       // B-> order
bool root_positive_backarrow(const std::vector<int>& beta);   // B<- order
long pair_root_coweight(const std::vector<int>& beta, const std::vector<long>& lam);

// Pullback action on affine functions: w.(beta,k) = (u beta, k - <u beta, trans>).
AffineRoot act_fun(const AffineElt& w, const AffineRoot& a);
// Level transform under conjugation of affine root subgroups.
AffineRoot act_conj(const AffineElt& w, const AffineRoot& a);

// The four word systems used throughout: the two affine Coxeter presentations
// (s-system of type C~n; embedded primed s'-system of type C~(n-1)) and the
// two finite B<- systems (t, t').
enum class WordSystem { SAff, SPrimeAff, TFin, TPrimeFin };

std::string word_system_name(WordSystem s);
std::optional<WordSystem> word_system_from_name(const std::string& s);

// Descriptor for one system at rank n: generators as AffineElts, simple
// (affine) roots, braid bond orders, named weight profiles.
class CoxeterDescriptor {
public:
  CoxeterDescriptor(WordSystem sys, int n);

  WordSystem system() const { return sys_; }
  int rank() const { return n_; }
  int first_gen() const;                // 0 for SAff, 1 for SPrimeAff, 1/2 for t/t'
  int last_gen() const;                 // n
  std::vector<int> gen_indices() const;

  const AffineElt& generator(int i) const;
  const AffineRoot& simple_root(int i) const;
  // Braid bond order between generators i and j (2, 3, 4 or 0 for infinity).
  int bond_order(int i, int j) const;

  bool member(const AffineElt& x) const;
  bool is_affine() const { return sys_ == WordSystem::SAff || sys_ == WordSystem::SPrimeAff; }

  // True iff l(x s_i) < l(x).
  bool right_descent(const AffineElt& x, int i) const;
  // True iff l(s_i x) < l(x).
  bool left_descent(const AffineElt& x, int i) const;

  AffineElt word_to_elt(const std::vector<int>& word) const;
  std::vector<int> reduced_word(const AffineElt& x) const;
  std::vector<int> reduced_word_random(const AffineElt& x, std::mt19937_64& rng) const;
  long length(const AffineElt& x) const;

  // Named weight profiles: SAff has "l", "l0"; SPrimeAff has "lprime", "l2".
  std::vector<std::string> profile_names() const;
  int profile_weight(const std::string& profile, int gen) const;
  long weighted_length(const std::string& profile, const AffineElt& x) const;

  // Occurrences of generator g in a reduced word, cross-checked over `tries`
  // independently generated reduced words (throws on disagreement).
  long occurrence_count(const AffineElt& x, int g, std::mt19937_64& rng, int tries = 3) const;

private:
  WordSystem sys_;
  int n_;
  std::vector<AffineElt> gens_;
  std::vector<AffineRoot> roots_;
};

// Substitution of the prime systems into the unprimed ones:
// s'_1 -> s_1 s_0 s_1, s'_i -> s_i;  t'_2 -> t_2 t_1 t_2, t'_i -> t_i.
std::vector<int> substitute_prime_word(WordSystem primed, const std::vector<int>& word);
AffineElt embed_prime(int n, WordSystem primed, const std::vector<int>& word);

// Enumerate the subgroup generated by the listed generators of d (BFS).
// Throws when the closure exceeds `cap`.
std::vector<AffineElt> enumerate_subgroup(const CoxeterDescriptor& d,
                                          const std::vector<int>& gens, std::size_t cap = 200000);

// Enumerate all group elements of Coxeter length <= radius, with lengths.
std::vector<std::pair<AffineElt, int>> enumerate_ball(const CoxeterDescriptor& d, int radius);

// Poincare polynomial sum_{w in <gens>} q^{weighted length(w)} in the ring
// {"v"} with q = v^2.
LaurentPoly poincare_poly(const CoxeterDescriptor& d, const std::string& profile,
                          const std::vector<int>& gens);

// Reverse-standard Levi block structure: symplectic block on coordinates
// 1..nb, GL blocks of the given sizes covering nb+1..n in order.
struct BlockLevi {
  int n = 0;
  int nb = 0;
  std::vector<int> gl;

  static BlockLevi minimal_plus(int n);   // nb = 0, all GL(1)
  static BlockLevi minimal_minus(int n);  // nb = 1, rest GL(1)

  bool in_levi_roots(const std::vector<int>& beta) const;
  std::vector<std::vector<int>> unipotent_roots() const;  // Phi_U (B<- positive, not in M)
  bool levi_contains(const AffineElt& x, bool minus_case) const;
  // Strictly P-dominant M-central coweight (for central corrections).
  std::vector<long> central_positive_coweight() const;
};

// P-positivity relative to the standard Iwahori: x I_U x^{-1} c I_U and
// x^{-1} I_Ubar x c I_Ubar, tested on minimal affine-root levels.
bool is_positive(const BlockLevi& levi, const AffineElt& x);

// Finite parabolic P in P(M^1) tracked by its set of reduced restricted
// roots in X^*(T^1) (coordinates 2..n).
struct ParabolicM1 {
  int n = 0;
  std::set<std::vector<int>> reduced_roots;

  static ParabolicM1 base(int n);  // P^1
  ParabolicM1 conjugated(const SignedPerm& v) const;
  ParabolicM1 opposite() const;
};

long shared_reduced_roots(const ParabolicM1& p, const ParabolicM1& q);

// Minimal-length representatives: the elements w of the finite group Omega_0
// with w(beta_j) B<- positive for every j in J (t-system generator subset),
// one per coset w Omega_J.
std::vector<SignedPerm> min_coset_reps(int n, const std::vector<int>& J);

std::vector<SignedPerm> enumerate_hyperoctahedral(int n);

}  // namespace heckeforge

#endif
