#pragma once
#include "kc/alexmod.hpp"
#include "kc/freeword.hpp"
#include "kc/intmatrix.hpp"

#include <string>
#include <vector>

namespace kc {

// Finitely presented group; relator letters index into `generators`.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  static GroupPresentation make(std::vector<std::string> gens,
                                const std::vector<std::string> &relator_words);
  IntMatrix exponent_matrix() const; // relators x generators
};

// w in P^1 G: the image of w in H_1(G; R0) vanishes.
bool member_P1(const GroupPresentation &G, const FreeWord &w,
               const CoeffSpec &R0);

// First homology of the infinite cyclic cover with R1[t^{+-1}] coefficients,
// presented through the Fox jacobian of the relators.  Requires H_1(G) = Z.
class AlexanderModule {
public:
  static AlexanderModule build(const GroupPresentation &G,
                               const CoeffSpec &R1);

  // Presentation-coordinate vectors in Lambda^{k-1}.
  using Element = std::vector<UPoly>;

  // Class of a word of trivial R0-abelianization (its lift to the cover).
  Element class_of(const FreeWord &w) const; // throws NotInP1 if it cannot lift
  bool is_zero(const Element &e) const;
  bool is_torsion(const Element &e) const;
  // poly (one-variable Laurent) annihilates e.
  bool annihilates(const Element &e, const LaurentPoly &poly) const;
  Element scale(const Element &e, const LaurentPoly &poly) const;

  // Generator of the first nontrivial cyclic summand; identity element when
  // the module is trivial.
  Element torsion_generator() const;

  // Product of the invariant factors, monic with nonzero constant term;
  // zero polynomial when the module has free rank.
  LaurentPoly order_polynomial() const;
  long free_rank() const { return free_rank_; }
  const std::vector<UPoly> &invariant_factors() const { return factors_; }
  const CoeffSpec &coeff() const { return F_.spec; }

private:
  FieldCtx F_;
  long ngens_ = 0;             // presentation generators k
  std::vector<long> eps_;      // G -> Z exponents per generator
  UMatrix kernel_inv_;         // Rinv of the 1 x k boundary SNF
  UMatrix snf_L_, snf_Linv_;   // row transforms of the presentation matrix
  std::vector<UPoly> diag_;    // SNF diagonal of the presentation matrix
  std::vector<UPoly> factors_; // non-unit invariant factors, normalized
  long module_rank_ = 0;       // k - 1
  long free_rank_ = 0;
  friend struct ModuleAccess;

  std::vector<UPoly> reduce(const Element &e) const;
  UPoly laurent_to_upoly(const LaurentPoly &p) const;
};

// w in P^2 G for the series P = (R0, R1): requires w in P^1 over R0 and the
// vanishing of w's class in the R1-Alexander module.  Only R0 = Q is
// computable here (level-1 coefficients stay one-variable Laurent).
bool member_P2(const GroupPresentation &G, const FreeWord &w,
               const CoeffSpec &R0, const CoeffSpec &R1);

bool annihilation_check(const AlexanderModule &M,
                        const AlexanderModule::Element &e,
                        const LaurentPoly &poly);

// Evaluating every variable at 1 yields 1.
bool augmentation_one_check(const LaurentPoly &poly);

} // namespace kc
