#pragma once
#include "kc/laurent.hpp"

#include <vector>

namespace kc {

// Dense univariate polynomial over a runtime coefficient field (Q or F_p),
// coefficients stored as canonical rationals.  Together with unit
// normalization (stripping powers of t) this implements arithmetic in the
// PID F[t^{+-1}].
struct UPoly {
  std::vector<Rat> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rat coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Rat(0);
  }
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  static UPoly constant(Rat v);
  static UPoly monomial(Rat v, int deg);
};

struct FieldCtx {
  CoeffSpec spec;
  Rat norm(const Rat &a) const;
  bool is_zero(const Rat &a) const { return norm(a) == 0; }
  Rat inv(const Rat &a) const;
};

UPoly u_normalize(UPoly a, const FieldCtx &F);
UPoly u_add(const UPoly &a, const UPoly &b, const FieldCtx &F);
UPoly u_sub(const UPoly &a, const UPoly &b, const FieldCtx &F);
UPoly u_mul(const UPoly &a, const UPoly &b, const FieldCtx &F);
void u_divmod(const UPoly &a, const UPoly &b, UPoly &q, UPoly &r,
              const FieldCtx &F);
bool u_divides(const UPoly &d, const UPoly &a, const FieldCtx &F);
UPoly u_make_monic(UPoly a, const FieldCtx &F);
// Strip the largest power of t (a unit in the Laurent ring).
UPoly u_strip_unit(UPoly a);
bool u_is_unit(const UPoly &a); // nonzero constant after stripping

using UMatrix = std::vector<std::vector<UPoly>>;

// L * M * R = D diagonal with the divisibility chain, transforms invertible
// over F[t]; inverse transforms tracked alongside.
struct USmith {
  std::vector<UPoly> diag;
  UMatrix L, Linv, R, Rinv;
};
USmith u_smith(UMatrix m, const FieldCtx &F);

std::vector<UPoly> u_mat_vec(const UMatrix &m, const std::vector<UPoly> &v,
                             const FieldCtx &F);

} // namespace kc
