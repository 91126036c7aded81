#include "kc/freeword.hpp"

#include "kc/errors.hpp"
#include "kc/fox.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

namespace kc {

namespace {

void reduce(std::vector<int> &v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (int x : v) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  v = std::move(out);
}

} // namespace

FreeWord::FreeWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (int x : letters_)
    if (x == 0) throw std::invalid_argument("zero letter in word");
  reduce(letters_);
}

FreeWord FreeWord::generator(int i, int exp) {
  assert(i >= 1);
  std::vector<int> v;
  int s = exp >= 0 ? i : -i;
  for (int k = 0; k < std::abs(exp); ++k) v.push_back(s);
  return FreeWord(std::move(v));
}

FreeWord FreeWord::parse(const std::string &s) {
  std::vector<int> v;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c == 'x' || c == 'X') {
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
        ++j;
      if (j == i + 1)
        throw std::invalid_argument("bad word syntax near '" + s.substr(i) +
                                    "'");
      int idx = std::stoi(s.substr(i + 1, j - i - 1));
      if (idx < 1) throw std::invalid_argument("generator index must be >= 1");
      v.push_back(c == 'x' ? idx : -idx);
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      int idx = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
      v.push_back(std::islower(static_cast<unsigned char>(c)) ? idx : -idx);
      ++i;
    } else if (c == '1' && s.size() == 1) {
      ++i; // identity word
    } else {
      throw std::invalid_argument(std::string("bad character '") + c +
                                  "' in word");
    }
  }
  return FreeWord(std::move(v));
}

int FreeWord::max_generator() const {
  int m = 0;
  for (int x : letters_) m = std::max(m, std::abs(x));
  return m;
}

FreeWord FreeWord::inverse() const {
  std::vector<int> v(letters_.rbegin(), letters_.rend());
  for (int &x : v) x = -x;
  FreeWord w;
  w.letters_ = std::move(v); // inverse of reduced word is reduced
  return w;
}

FreeWord FreeWord::operator*(const FreeWord &o) const {
  std::vector<int> v = letters_;
  v.insert(v.end(), o.letters_.begin(), o.letters_.end());
  reduce(v);
  FreeWord w;
  w.letters_ = std::move(v);
  return w;
}

FreeWord FreeWord::conjugate(const FreeWord &x) const {
  return x.inverse() * (*this) * x;
}

FreeWord FreeWord::commutator(const FreeWord &a, const FreeWord &b) {
  return a * b * a.inverse() * b.inverse();
}

std::vector<long> FreeWord::exponent_vector(int rank) const {
  std::vector<long> e(rank, 0);
  for (int x : letters_) {
    int i = std::abs(x);
    if (i > rank) throw IndexOutOfRange("letter exceeds rank");
    e[i - 1] += x > 0 ? 1 : -1;
  }
  return e;
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (int x : letters_) os << (x > 0 ? "x" : "X") << std::abs(x);
  return os.str();
}

std::string FreeWord::str_letters() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (int x : letters_) {
    int i = std::abs(x) - 1;
    assert(i < 26);
    s += static_cast<char>((x > 0 ? 'a' : 'A') + i);
  }
  return s;
}

std::shared_ptr<const CommExpr> CommExpr::gen(int i) {
  auto e = std::make_shared<CommExpr>();
  e->kind = Kind::Gen;
  e->index = i;
  return e;
}

std::shared_ptr<const CommExpr>
CommExpr::comm(std::shared_ptr<const CommExpr> x,
               std::shared_ptr<const CommExpr> y) {
  auto e = std::make_shared<CommExpr>();
  e->kind = Kind::Comm;
  e->a = std::move(x);
  e->b = std::move(y);
  return e;
}

std::shared_ptr<const CommExpr>
CommExpr::conj(std::shared_ptr<const CommExpr> x, int by) {
  auto e = std::make_shared<CommExpr>();
  e->kind = Kind::Conj;
  e->a = std::move(x);
  e->index = by;
  return e;
}

int CommExpr::depth() const {
  switch (kind) {
  case Kind::Gen:
    return 0;
  case Kind::Conj:
    return a->depth();
  case Kind::Comm:
    return std::min(a->depth(), b->depth()) + 1;
  }
  return 0;
}

FreeWord CommExpr::word() const {
  switch (kind) {
  case Kind::Gen:
    return FreeWord::generator(index);
  case Kind::Conj:
    return a->word().conjugate(FreeWord::generator(index));
  case Kind::Comm:
    return FreeWord::commutator(a->word(), b->word());
  }
  return FreeWord();
}

std::string CommExpr::str() const {
  switch (kind) {
  case Kind::Gen:
    return "x" + std::to_string(index);
  case Kind::Conj:
    return a->str() + "^x" + std::to_string(index);
  case Kind::Comm:
    return "[" + a->str() + "," + b->str() + "]";
  }
  return "";
}

namespace {

// Structural search: can w be written as [u, v] with u, v in F^(n-1)?
// Tries all splittings of w = u' v' with the commutator shape
// u v u^{-1} v^{-1}; sound but incomplete.
bool commutator_split(const FreeWord &w, int rank, int n, int budget);

bool in_derived_checked(const FreeWord &w, int rank, int n, int budget) {
  if (n <= 0) return true;
  if (w.is_identity()) return true;
  auto e = w.exponent_vector(rank);
  for (long x : e)
    if (x != 0) return false;
  if (n == 1) return true;
  // Exact level-2 test: the abelianized Fox vector is the class of w in
  // F^(1)/F^(2).
  bool fox_zero = true;
  for (int i = 1; i <= rank && fox_zero; ++i)
    if (!project_level1(fox_derivative(w, i), CoeffSpec::rationals()).is_zero())
      fox_zero = false;
  if (n == 2) return fox_zero;
  if (!fox_zero) return false;
  return commutator_split(w, rank, n, budget);
}

bool commutator_split(const FreeWord &w, int rank, int n, int budget) {
  if (budget <= 0) throw UnsupportedLevel("depth check budget exhausted");
  const auto &L = w.letters();
  size_t len = L.size();
  // Try w = u v u^{-1} v^{-1} over all (len_u, len_v) split points of the
  // unreduced concatenation; cancellation-free splits only.
  for (size_t lu = 1; lu + 1 < len; ++lu)
    for (size_t lv = 1; lu + lv < len; ++lv) {
      if (lu + lv + lu > len) break;
      size_t lrest = len - 2 * lu - lv;
      if (lrest != lv) continue;
      FreeWord u(std::vector<int>(L.begin(), L.begin() + lu));
      FreeWord v(std::vector<int>(L.begin() + lu, L.begin() + lu + lv));
      if (FreeWord::commutator(u, v) == w) {
        try {
          if (in_derived_checked(u, rank, n - 1, budget - 1) &&
              in_derived_checked(v, rank, n - 1, budget - 1))
            return true;
        } catch (const UnsupportedLevel &) {
        }
      }
    }
  throw UnsupportedLevel(
      "cannot certify membership in F^(" + std::to_string(n) +
      ") syntactically; level >= 3 checks need a construction certificate");
}

} // namespace

bool in_derived_subgroup(const FreeWord &w, int rank, int n) {
  return in_derived_checked(w, rank, n, 64);
}

} // namespace kc
