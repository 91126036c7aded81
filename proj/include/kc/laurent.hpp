#pragma once
#include "kc/poly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace kc {

// Coefficient domain selector for operations that run over Q or over F_p.
struct CoeffSpec {
  enum class Kind { rationals, mod_p } kind = Kind::rationals;
  long p = 0;

  static CoeffSpec rationals() { return {Kind::rationals, 0}; }
  static CoeffSpec mod_p(long p);
  bool is_modp() const { return kind == Kind::mod_p; }
  std::string str() const;
};

// Multivariate Laurent polynomial with rational coefficients.  Variables are
// kept sorted; terms are a map from exponent vectors (entries may be
// negative) to nonzero coefficients, so equality and printing are canonical.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly constant(Rat v);
  static LaurentPoly variable(const std::string &name, int exp = 1);
  static LaurentPoly monomial(Rat coeff, const std::vector<std::string> &vars,
                              const std::vector<int> &exps);

  const std::vector<std::string> &vars() const { return vars_; }
  const std::map<std::vector<int>, Rat> &terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const; // 0 for zero, requires is_constant otherwise

  LaurentPoly with_vars(const std::vector<std::string> &vars) const;

  // t -> 1/t for every variable (resp. one variable).
  LaurentPoly invert_vars() const;
  LaurentPoly invert_var(const std::string &name) const;

  // Evaluate at unit (nonzero) rational arguments; unassigned variables
  // default to 1.  Zero argument -> InvalidUnit.
  Rat eval_units(const std::map<std::string, Rat> &args) const;
  Rat eval_all_one() const;

  // Reduce coefficients into [0, p) for mod-p semantics.
  LaurentPoly reduce_mod(long p) const;

  std::string str() const;

  friend LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator-(const LaurentPoly &a);
  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b);

private:
  std::vector<std::string> vars_;
  std::map<std::vector<int>, Rat> terms_;

  void insert_term(const std::vector<int> &e, const Rat &c);
  friend LaurentPoly align(const LaurentPoly &a,
                           const std::vector<std::string> &vars);
};

// Rational a reduced into F_p (throws InvalidPrime if the denominator
// vanishes mod p).
Rat modp_normalize(const Rat &a, long p);

// Rank of a matrix of Laurent polynomials over the fraction field of the
// Laurent ring with the given coefficient field.  A seeded evaluation at
// random units certifies full-rank answers; anything less falls back to
// fraction-free elimination.
long fraction_rank(const std::vector<std::vector<LaurentPoly>> &m,
                   const CoeffSpec &coeff, std::uint64_t seed = 0);

} // namespace kc
