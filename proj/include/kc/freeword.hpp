#pragma once
#include <memory>
#include <string>
#include <vector>

namespace kc {

// Freely reduced word in a free group.  Letters are signed 1-based generator
// indices: +i for x_i, -i for x_i^{-1}.
class FreeWord {
public:
  FreeWord() = default;
  explicit FreeWord(std::vector<int> letters);

  static FreeWord generator(int i, int exp = 1);
  // Accepts both "x1X2x1" (capital = inverse) and letter form "abAB"
  // (a -> x1, b -> x2, ...).
  static FreeWord parse(const std::string &s);

  const std::vector<int> &letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  int max_generator() const;

  FreeWord inverse() const;
  FreeWord operator*(const FreeWord &o) const;
  // w^x = x^{-1} w x
  FreeWord conjugate(const FreeWord &x) const;
  static FreeWord commutator(const FreeWord &a, const FreeWord &b);

  // Signed occurrence counts per generator, indices 1..rank.
  std::vector<long> exponent_vector(int rank) const;

  std::string str() const;        // x1X2 form
  std::string str_letters() const; // abAB form, generators <= 26

  friend bool operator==(const FreeWord &a, const FreeWord &b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const FreeWord &a, const FreeWord &b) {
    return a.letters_ < b.letters_;
  }

private:
  std::vector<int> letters_;
};

// Formal expression over a free group tracking how a word was built from
// generators by commutators and conjugation.  The guaranteed derived depth
// is structural: generators have depth 0, [a, b] has min(depth a, depth b)+1,
// conjugation preserves depth.
struct CommExpr {
  enum class Kind { Gen, Comm, Conj } kind = Kind::Gen;
  int index = 0; // Gen: generator; Conj: conjugating generator
  std::shared_ptr<const CommExpr> a, b;

  static std::shared_ptr<const CommExpr> gen(int i);
  static std::shared_ptr<const CommExpr> comm(std::shared_ptr<const CommExpr> x,
                                              std::shared_ptr<const CommExpr> y);
  static std::shared_ptr<const CommExpr> conj(std::shared_ptr<const CommExpr> x,
                                              int by);

  int depth() const;
  FreeWord word() const;
  std::string str() const;
};

// Membership of w in the n-th derived subgroup of the free group on `rank`
// generators.  Exact for n <= 2 (exponent sums, then abelianized Fox
// derivatives); for n >= 3 a structural commutator-splitting search is used,
// which proves membership when it succeeds but may fail on valid inputs, in
// which case UnsupportedLevel is thrown rather than guessing.
bool in_derived_subgroup(const FreeWord &w, int rank, int n);

} // namespace kc
