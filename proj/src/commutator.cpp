#include "kc/commutator.hpp"

#include "kc/errors.hpp"
#include "kc/fox.hpp"

#include <cassert>

namespace kc {

GroupPresentation
GroupPresentation::make(std::vector<std::string> gens,
                        const std::vector<std::string> &relator_words) {
  GroupPresentation G;
  G.generators = std::move(gens);
  for (const auto &s : relator_words) {
    FreeWord w = FreeWord::parse(s);
    if (w.max_generator() > static_cast<int>(G.generators.size()))
      throw std::invalid_argument("relator uses undeclared generator");
    G.relators.push_back(std::move(w));
  }
  return G;
}

IntMatrix GroupPresentation::exponent_matrix() const {
  long k = static_cast<long>(generators.size());
  long l = static_cast<long>(relators.size());
  IntMatrix m(l, k);
  for (long i = 0; i < l; ++i) {
    auto e = relators[i].exponent_vector(static_cast<int>(k));
    for (long j = 0; j < k; ++j) m.at(i, j) = e[j];
  }
  return m;
}

bool member_P1(const GroupPresentation &G, const FreeWord &w,
               const CoeffSpec &R0) {
  long k = static_cast<long>(G.generators.size());
  if (w.max_generator() > k)
    throw std::invalid_argument("word uses undeclared generator");
  IntMatrix E = G.exponent_matrix();
  IntMatrix Ew(E.rows + 1, E.cols);
  for (long i = 0; i < E.rows; ++i)
    for (long j = 0; j < E.cols; ++j) Ew.at(i, j) = E.at(i, j);
  auto ev = w.exponent_vector(static_cast<int>(k));
  for (long j = 0; j < k; ++j) Ew.at(E.rows, j) = ev[j];
  if (R0.is_modp())
    return rank_mod_p(Ew, R0.p) == rank_mod_p(E, R0.p);
  return rank_over_rationals(Ew) == rank_over_rationals(E);
}

namespace {

// Exponent map G -> Z when H_1(G) = Z, found through the integer SNF of the
// relator exponent matrix; NonCyclicAbelianization otherwise.
std::vector<long> infinite_cyclic_exponents(const GroupPresentation &G) {
  long k = static_cast<long>(G.generators.size());
  IntMatrix Et = G.exponent_matrix().transpose(); // k x l, relators as columns
  SnfResult snf = smith_normal_form(Et);
  long rank = 0;
  for (const auto &d : snf.diagonal) {
    if (d == 0) continue;
    if (d != 1)
      throw NonCyclicAbelianization("H_1 has torsion Z/" + d.get_str());
    ++rank;
  }
  if (k - rank != 1)
    throw NonCyclicAbelianization("H_1 has free rank " +
                                  std::to_string(k - rank));
  // Coordinates of the cokernel are U * v; the free coordinate is row `rank`
  // (0-based) of U, past the nonzero diagonal entries.
  std::vector<long> eps(k);
  for (long j = 0; j < k; ++j) {
    const Int &v = snf.left.at(rank, j);
    assert(v.fits_slong_p());
    eps[j] = v.get_si();
  }
  return eps;
}

// Abelianized Fox vector of w through the exponent map, as one-variable
// Laurent data (map degree -> coefficient), then shifted into F[t].
std::vector<UPoly> fox_vector_poly(const FreeWord &w,
                                   const std::vector<long> &eps,
                                   const FieldCtx &F, long *shift_out) {
  long k = static_cast<long>(eps.size());
  std::vector<std::map<long, Rat>> raw(k);
  long min_deg = 0;
  for (long j = 0; j < k; ++j) {
    WordSum ds = fox_derivative(w, static_cast<int>(j) + 1);
    for (const auto &[word, c] : ds) {
      auto e = word.exponent_vector(static_cast<int>(k));
      long deg = 0;
      for (long i = 0; i < k; ++i) deg += eps[i] * e[i];
      raw[j][deg] += Rat(c);
      min_deg = std::min(min_deg, deg);
    }
  }
  std::vector<UPoly> out(k);
  for (long j = 0; j < k; ++j) {
    UPoly p;
    for (const auto &[deg, c] : raw[j]) {
      long d = deg - min_deg;
      if (p.c.size() < static_cast<size_t>(d + 1))
        p.c.resize(d + 1, Rat(0));
      p.c[d] += c;
    }
    out[j] = u_normalize(std::move(p), F);
  }
  if (shift_out) *shift_out = min_deg;
  return out;
}

} // namespace

struct ModuleAccess {
  static AlexanderModule build(const GroupPresentation &G,
                               const CoeffSpec &R1) {
    AlexanderModule M;
    M.F_ = FieldCtx{R1};
    M.eps_ = infinite_cyclic_exponents(G);
    long k = static_cast<long>(M.eps_.size());
    M.ngens_ = k;
    M.module_rank_ = k - 1;
    const FieldCtx &F = M.F_;

    // Boundary row u_j = 1 - t^{-eps_j}, cleared to polynomials by one
    // common unit t^K.
    long K = 0;
    for (long e : M.eps_) K = std::max(K, e);
    UMatrix row(1, std::vector<UPoly>(k));
    for (long j = 0; j < k; ++j) {
      UPoly u = UPoly::monomial(Rat(1), static_cast<int>(K));
      u = u_sub(u, UPoly::monomial(Rat(1), static_cast<int>(K - M.eps_[j])),
                F);
      row[0][j] = std::move(u);
    }
    USmith ksnf = u_smith(std::move(row), F);
    assert(!ksnf.diag[0].is_zero());
    M.kernel_inv_ = ksnf.Rinv;

    // Relation columns: Fox vectors of the relators in kernel coordinates.
    long l = static_cast<long>(G.relators.size());
    UMatrix P(k - 1, std::vector<UPoly>(l));
    for (long r = 0; r < l; ++r) {
      auto vec = fox_vector_poly(G.relators[r], M.eps_, F, nullptr);
      auto coords = u_mat_vec(ksnf.Rinv, vec, F);
      assert(coords[0].is_zero());
      for (long i = 1; i < k; ++i) P[i - 1][r] = std::move(coords[i]);
    }
    USmith psnf = u_smith(std::move(P), F);
    M.snf_L_ = std::move(psnf.L);
    M.snf_Linv_ = std::move(psnf.Linv);
    M.diag_.assign(M.module_rank_, UPoly());
    for (size_t i = 0; i < psnf.diag.size(); ++i) M.diag_[i] = psnf.diag[i];

    M.free_rank_ = 0;
    for (long i = 0; i < M.module_rank_; ++i) {
      if (M.diag_[i].is_zero()) {
        ++M.free_rank_;
      } else {
        UPoly f = u_make_monic(u_strip_unit(M.diag_[i]), F);
        if (f.degree() > 0) M.factors_.push_back(std::move(f));
      }
    }
    return M;
  }
};

AlexanderModule AlexanderModule::build(const GroupPresentation &G,
                                       const CoeffSpec &R1) {
  return ModuleAccess::build(G, R1);
}

AlexanderModule::Element AlexanderModule::class_of(const FreeWord &w) const {
  long deg = 0;
  auto e = w.exponent_vector(static_cast<int>(ngens_));
  for (long i = 0; i < ngens_; ++i) deg += eps_[i] * e[i];
  if (deg != 0)
    throw NotInP1("word has nonzero image in the infinite cyclic quotient");
  auto vec = fox_vector_poly(w, eps_, F_, nullptr);
  auto coords = u_mat_vec(kernel_inv_, vec, F_);
  assert(coords[0].is_zero());
  return Element(coords.begin() + 1, coords.end());
}

std::vector<UPoly> AlexanderModule::reduce(const Element &e) const {
  assert(static_cast<long>(e.size()) == module_rank_);
  std::vector<UPoly> y = u_mat_vec(snf_L_, e, F_);
  for (long i = 0; i < module_rank_; ++i) {
    const UPoly &d = diag_[i];
    if (d.is_zero()) continue;
    UPoly dd = u_strip_unit(d);
    if (u_is_unit(dd)) {
      y[i] = UPoly();
      continue;
    }
    UPoly q, r;
    u_divmod(u_strip_unit(y[i]), dd, q, r, F_);
    y[i] = std::move(r);
  }
  return y;
}

bool AlexanderModule::is_zero(const Element &e) const {
  for (const auto &p : reduce(e))
    if (!p.is_zero()) return false;
  return true;
}

bool AlexanderModule::is_torsion(const Element &e) const {
  std::vector<UPoly> y = u_mat_vec(snf_L_, e, F_);
  for (long i = 0; i < module_rank_; ++i)
    if (diag_[i].is_zero() && !y[i].is_zero()) return false;
  return true;
}

UPoly AlexanderModule::laurent_to_upoly(const LaurentPoly &p) const {
  if (p.vars().size() > 1)
    throw std::invalid_argument("module scalars are one-variable");
  UPoly u;
  int min_deg = 0;
  for (const auto &[ev, c] : p.terms())
    if (!ev.empty()) min_deg = std::min(min_deg, ev[0]);
  for (const auto &[ev, c] : p.terms()) {
    int d = (ev.empty() ? 0 : ev[0]) - min_deg;
    if (u.c.size() < static_cast<size_t>(d + 1)) u.c.resize(d + 1, Rat(0));
    u.c[d] += c;
  }
  return u_normalize(std::move(u), F_);
}

AlexanderModule::Element
AlexanderModule::scale(const Element &e, const LaurentPoly &poly) const {
  UPoly f = laurent_to_upoly(poly);
  Element r(e.size());
  for (size_t i = 0; i < e.size(); ++i) r[i] = u_mul(e[i], f, F_);
  return r;
}

bool AlexanderModule::annihilates(const Element &e,
                                  const LaurentPoly &poly) const {
  return is_zero(scale(e, poly));
}

AlexanderModule::Element AlexanderModule::torsion_generator() const {
  Element unit(module_rank_);
  long target = -1;
  for (long i = 0; i < module_rank_; ++i)
    if (!diag_[i].is_zero() && !u_is_unit(diag_[i])) {
      target = i;
      break;
    }
  if (target < 0) return unit; // trivial or free module: identity element
  std::vector<UPoly> y(module_rank_);
  y[target] = UPoly::constant(Rat(1));
  return u_mat_vec(snf_Linv_, y, F_);
}

LaurentPoly AlexanderModule::order_polynomial() const {
  if (free_rank_ > 0) return LaurentPoly();
  UPoly prod = UPoly::constant(Rat(1));
  for (const auto &f : factors_) prod = u_mul(prod, f, F_);
  prod = u_make_monic(u_strip_unit(std::move(prod)), F_);
  LaurentPoly out;
  for (int i = 0; i <= prod.degree(); ++i)
    if (prod.coeff(i) != 0)
      out = out + LaurentPoly::monomial(prod.coeff(i), {"t"}, {i});
  if (out.is_zero()) out = LaurentPoly::constant(Rat(1));
  return out;
}

bool member_P2(const GroupPresentation &G, const FreeWord &w,
               const CoeffSpec &R0, const CoeffSpec &R1) {
  if (R0.is_modp())
    throw UnsupportedLevel(
        "level-1 coefficients over a finite cyclic quotient are not "
        "one-variable Laurent; only R0 = Q is supported");
  if (!member_P1(G, w, R0))
    throw NotInP1("word is not in P^1");
  AlexanderModule M = AlexanderModule::build(G, R1);
  return M.is_zero(M.class_of(w));
}

bool annihilation_check(const AlexanderModule &M,
                        const AlexanderModule::Element &e,
                        const LaurentPoly &poly) {
  return M.annihilates(e, poly);
}

bool augmentation_one_check(const LaurentPoly &poly) {
  return poly.eval_all_one() == 1;
}

} // namespace kc
