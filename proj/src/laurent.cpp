#include "kc/laurent.hpp"

#include "kc/errors.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

namespace kc {

CoeffSpec CoeffSpec::mod_p(long p) {
  if (!is_prime_int(p)) throw InvalidPrime("p = " + std::to_string(p));
  return {Kind::mod_p, p};
}

std::string CoeffSpec::str() const {
  return is_modp() ? "mod_p(" + std::to_string(p) + ")" : "rationals";
}

Rat modp_normalize(const Rat &a, long p) {
  Int P(p);
  Int num = a.get_num() % P;
  Int den = a.get_den() % P;
  if (den == 0) throw InvalidPrime("denominator divisible by p");
  Int inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  Int r = num * inv % P;
  if (r < 0) r += P;
  return Rat(r);
}

void LaurentPoly::insert_term(const std::vector<int> &e, const Rat &c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::constant(Rat v) {
  LaurentPoly p;
  if (v != 0) p.terms_.emplace(std::vector<int>{}, std::move(v));
  return p;
}

LaurentPoly LaurentPoly::variable(const std::string &name, int exp) {
  LaurentPoly p;
  p.vars_ = {name};
  p.terms_.emplace(std::vector<int>{exp}, Rat(1));
  return p;
}

LaurentPoly LaurentPoly::monomial(Rat coeff,
                                  const std::vector<std::string> &vars,
                                  const std::vector<int> &exps) {
  assert(vars.size() == exps.size());
  LaurentPoly p = constant(std::move(coeff));
  for (size_t i = 0; i < vars.size(); ++i)
    if (exps[i] != 0) p = p * variable(vars[i], exps[i]);
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto &e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat LaurentPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  assert(is_constant());
  return terms_.begin()->second;
}

LaurentPoly align(const LaurentPoly &a, const std::vector<std::string> &vars) {
  if (a.vars_ == vars) return a;
  LaurentPoly r;
  r.vars_ = vars;
  std::vector<int> pos(a.vars_.size());
  for (size_t i = 0; i < a.vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), a.vars_[i]);
    assert(it != vars.end() && *it == a.vars_[i]);
    pos[i] = static_cast<int>(it - vars.begin());
  }
  for (const auto &[e, c] : a.terms_) {
    std::vector<int> ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

LaurentPoly LaurentPoly::with_vars(const std::vector<std::string> &vars) const {
  std::vector<std::string> u = vars;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  std::vector<std::string> merged;
  std::set_union(u.begin(), u.end(), vars_.begin(), vars_.end(),
                 std::back_inserter(merged));
  return align(*this, merged);
}

namespace {

std::vector<std::string> merged_vars(const LaurentPoly &a,
                                     const LaurentPoly &b) {
  std::vector<std::string> m;
  std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(),
                 b.vars().end(), std::back_inserter(m));
  return m;
}

} // namespace

LaurentPoly operator+(const LaurentPoly &a, const LaurentPoly &b) {
  auto vars = merged_vars(a, b);
  LaurentPoly x = align(a, vars), y = align(b, vars);
  for (const auto &[e, c] : y.terms_) x.insert_term(e, c);
  return x;
}

LaurentPoly operator-(const LaurentPoly &a) {
  LaurentPoly r = a;
  for (auto &[e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator-(const LaurentPoly &a, const LaurentPoly &b) {
  return a + (-b);
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  auto vars = merged_vars(a, b);
  LaurentPoly x = align(a, vars), y = align(b, vars);
  LaurentPoly r;
  r.vars_ = vars;
  for (const auto &[ea, ca] : x.terms_)
    for (const auto &[eb, cb] : y.terms_) {
      std::vector<int> e(vars.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.insert_term(e, ca * cb);
    }
  return r;
}

bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
  auto vars = merged_vars(a, b);
  return align(a, vars).terms_ == align(b, vars).terms_;
}

LaurentPoly LaurentPoly::invert_vars() const {
  LaurentPoly r;
  r.vars_ = vars_;
  for (const auto &[e, c] : terms_) {
    std::vector<int> ne(e.size());
    for (size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

LaurentPoly LaurentPoly::invert_var(const std::string &name) const {
  LaurentPoly r;
  r.vars_ = vars_;
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) return *this;
  size_t k = it - vars_.begin();
  for (const auto &[e, c] : terms_) {
    std::vector<int> ne = e;
    ne[k] = -ne[k];
    r.terms_.emplace(std::move(ne), c);
  }
  return r;
}

Rat LaurentPoly::eval_units(const std::map<std::string, Rat> &args) const {
  std::vector<Rat> vals(vars_.size(), Rat(1));
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = args.find(vars_[i]);
    if (it != args.end()) vals[i] = it->second;
    if (vals[i] == 0)
      throw InvalidUnit("variable " + vars_[i] + " evaluated at zero");
  }
  Rat total(0);
  for (const auto &[e, c] : terms_) {
    Rat t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      Rat base = vals[i];
      int k = e[i];
      if (k < 0) {
        base = 1 / base;
        k = -k;
      }
      for (int j = 0; j < k; ++j) t *= base;
    }
    total += t;
  }
  return total;
}

Rat LaurentPoly::eval_all_one() const {
  Rat total(0);
  for (const auto &[e, c] : terms_) total += c;
  return total;
}

LaurentPoly LaurentPoly::reduce_mod(long p) const {
  LaurentPoly r;
  r.vars_ = vars_;
  for (const auto &[e, c] : terms_) {
    Rat v = modp_normalize(c, p);
    if (v != 0) r.terms_.emplace(e, v);
  }
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    Rat coeff = c;
    if (first) {
      if (coeff < 0) {
        os << "-";
        coeff = -coeff;
      }
    } else {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
    if (coeff != 1 || !has_var) {
      os << coeff.get_str();
      if (has_var) os << "*";
    }
    bool first_var = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

// Runtime coefficient-field operations on Rat storage.
struct FieldOps {
  CoeffSpec spec;

  Rat norm(const Rat &a) const {
    return spec.is_modp() ? modp_normalize(a, spec.p) : a;
  }
  Rat inv(const Rat &a) const {
    Rat r = 1 / a;
    return norm(r);
  }
  bool zero(const Rat &a) const { return norm(a) == 0; }
};

LaurentPoly lp_normalize(const LaurentPoly &a, const FieldOps &F) {
  return F.spec.is_modp() ? a.reduce_mod(F.spec.p) : a;
}

// Leading (lexicographically largest) term of a nonzero poly.
std::pair<std::vector<int>, Rat> leading(const LaurentPoly &a) {
  auto it = std::prev(a.terms().end());
  return {it->first, it->second};
}

// Exact division in the Laurent ring (monomials are units).  Used only where
// Bareiss guarantees divisibility; the lex-leading term strictly drops each
// round, so exact inputs terminate.
LaurentPoly lp_exact_div(LaurentPoly a, const LaurentPoly &b,
                         const FieldOps &F) {
  assert(!b.is_zero());
  if (a.is_zero()) return a;
  a = a.with_vars(b.vars());
  const LaurentPoly bb = align(b, a.vars());
  auto [eb, cb] = leading(bb);
  Rat cb_inv = F.inv(cb);
  LaurentPoly q;
  while (!a.is_zero()) {
    auto [ea, ca] = leading(a);
    std::vector<int> em(ea.size());
    for (size_t i = 0; i < em.size(); ++i) em[i] = ea[i] - eb[i];
    LaurentPoly t = LaurentPoly::monomial(F.norm(ca * cb_inv), a.vars(), em);
    q = q + t;
    a = lp_normalize(a - t * bb, F);
  }
  return q;
}

long rational_matrix_rank(std::vector<std::vector<Rat>> m, const FieldOps &F) {
  long rows = static_cast<long>(m.size());
  long cols = rows ? static_cast<long>(m[0].size()) : 0;
  long rank = 0, row = 0;
  for (long col = 0; col < cols && row < rows; ++col) {
    long piv = -1;
    for (long i = row; i < rows; ++i)
      if (!F.zero(m[i][col])) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    Rat inv = F.inv(m[row][col]);
    for (long j = col; j < cols; ++j) m[row][j] = F.norm(m[row][j] * inv);
    for (long i = row + 1; i < rows; ++i) {
      Rat f = F.norm(m[i][col]);
      if (f == 0) continue;
      for (long j = col; j < cols; ++j)
        m[i][j] = F.norm(m[i][j] - f * m[row][j]);
    }
    ++row;
    ++rank;
  }
  return rank;
}

} // namespace

long fraction_rank(const std::vector<std::vector<LaurentPoly>> &input,
                   const CoeffSpec &coeff, std::uint64_t seed) {
  long rows = static_cast<long>(input.size());
  long cols = rows ? static_cast<long>(input[0].size()) : 0;
  if (rows == 0 || cols == 0) return 0;
  FieldOps F{coeff};

  // Collect the variable set.
  std::vector<std::string> vars;
  for (const auto &r : input)
    for (const auto &p : r) {
      std::vector<std::string> m;
      std::set_union(vars.begin(), vars.end(), p.vars().begin(),
                     p.vars().end(), std::back_inserter(m));
      vars = std::move(m);
    }

  // Fast path: evaluate at random units; a full-rank specialization bounds
  // the rank from below, so full rank is already certified.
  {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL);
    std::map<std::string, Rat> args;
    long lim = coeff.is_modp() ? coeff.p - 1 : 1 << 20;
    for (const auto &v : vars) {
      long x = lim <= 1 ? 1 : 1 + static_cast<long>(rng() % lim);
      args[v] = Rat(x);
    }
    bool ok = true;
    std::vector<std::vector<Rat>> ev(rows, std::vector<Rat>(cols));
    try {
      for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
          ev[i][j] = F.norm(input[i][j].eval_units(args));
    } catch (const domain_error &) {
      ok = false;
    }
    if (ok && rational_matrix_rank(std::move(ev), F) == std::min(rows, cols))
      return std::min(rows, cols);
  }

  // Exact fraction-free elimination; row-scale by monomials first so the
  // entries live in the polynomial subring.
  std::vector<std::vector<LaurentPoly>> m(rows);
  for (long i = 0; i < rows; ++i) {
    m[i].reserve(cols);
    for (long j = 0; j < cols; ++j)
      m[i].push_back(lp_normalize(input[i][j].with_vars(vars), F));
  }

  long rank = 0, row = 0;
  LaurentPoly prev = LaurentPoly::constant(Rat(1));
  for (long col = 0; col < cols && row < rows; ++col) {
    long piv = -1;
    for (long i = row; i < rows; ++i)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    for (long i = row + 1; i < rows; ++i) {
      for (long j = col + 1; j < cols; ++j) {
        LaurentPoly num =
            lp_normalize(m[i][j] * m[row][col] - m[i][col] * m[row][j], F);
        m[i][j] = num.is_zero() ? num : lp_exact_div(num, prev, F);
      }
      m[i][col] = LaurentPoly();
    }
    prev = m[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

} // namespace kc
