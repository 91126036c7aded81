#pragma once
#include "kc/intmatrix.hpp"
#include "kc/poly.hpp"
#include "kc/seifert.hpp"

// Test-side oracles, kept independent of the production code paths:
// signatures go through characteristic polynomials (Faddeev-LeVerrier),
// Descartes counting, and Sturm-chain root isolation of the integer
// polynomial Im[(1+it)^d] whose roots are tan(pi k/d); nothing here touches
// the production enclosures or the congruence-diagonalization routine.
namespace kc::oracle {

// Signature of a symmetric rational matrix by characteristic polynomial sign
// variations (exact for all-real-roots polynomials, zeros skipped).
long charpoly_signature(const std::vector<std::vector<Rat>> &m);

// Levine-Tristram signature at a regular omega = e^{2 pi i r/d}.
long lt_signature_regular(const SeifertMatrix &k, long d, long r);

// Product of the first k SNF diagonal entries equals |gcd of k x k minors|
// for every k (checked on small matrices by full minor enumeration).
bool snf_minor_gcd_check(const IntMatrix &m,
                         const std::vector<Int> &diagonal);

} // namespace kc::oracle
