#include "kc/jsequence.hpp"

#include <sstream>

namespace kc {

CandidateFamily default_family() {
  CandidateFamily f;
  f.generators = {
      trefoil(),          mirror(trefoil()),
      figure_eight(),     torus_knot_2(5),
      mirror(torus_knot_2(5)), torus_knot_2(7),
      mirror(torus_knot_2(7)), twist_knot(-2),
      mirror(twist_knot(-2)),
  };
  f.max_summands = 6;
  return f;
}

std::string expr_to_string(const std::vector<std::pair<long, std::string>> &e) {
  std::ostringstream os;
  bool first = true;
  for (const auto &[c, n] : e) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << n;
  }
  return os.str();
}

namespace {

long next_odd_prime(long p) {
  long q = std::max(p, 2L) + 1;
  while (q % 2 == 0 || !is_prime_int(q)) ++q;
  return q;
}

SeifertMatrix realize(const CandidateFamily &fam,
                      const std::vector<std::pair<long, std::string>> &expr) {
  SeifertMatrix acc = unknot();
  for (const auto &[c, name] : expr) {
    const SeifertMatrix *gen = nullptr;
    for (const auto &g : fam.generators)
      if (g.name() && *g.name() == name) gen = &g;
    if (!gen) throw std::invalid_argument("unknown generator " + name);
    SeifertMatrix term = c >= 0 ? *gen : concordance_inverse(*gen);
    for (long i = 0; i < std::labs(c); ++i) acc = connected_sum(acc, term);
  }
  return acc;
}

} // namespace

JSequence find_sequence(const Rat &C, long count, const CandidateFamily &fam,
                        long prime_max, long prime_min) {
  if (prime_max < 3 || prime_min < 3 || prime_min > prime_max)
    throw InvalidPrimeBound("need 3 <= prime_min <= prime_max");
  if (fam.generators.empty())
    throw std::invalid_argument("family must have generators");
  if (count < 1) throw std::invalid_argument("count must be positive");

  JSequence seq;
  seq.constant = C;
  long ngen = static_cast<long>(fam.generators.size());

  for (long slot = 0; slot < count; ++slot) {
    long prev_prime = seq.items.empty() ? 0 : seq.items.back().prime;
    bool found = false;
    long p = seq.items.empty() ? (is_prime_int(prime_min) && prime_min % 2
                                      ? prime_min
                                      : next_odd_prime(prime_min - 1))
                               : next_odd_prime(prev_prime);
    for (; p <= prime_max && !found; p = next_odd_prime(p)) {
      // Candidate bases in deterministic order: single generators, then
      // ordered difference pairs Q # -Q'.
      std::vector<std::vector<std::pair<long, std::string>>> bases;
      for (long i = 0; i < ngen; ++i)
        bases.push_back({{1, *fam.generators[i].name()}});
      for (long i = 0; i < ngen; ++i)
        for (long j = 0; j < ngen; ++j)
          if (i != j)
            bases.push_back({{1, *fam.generators[i].name()},
                             {-1, *fam.generators[j].name()}});

      for (long n = 1; n <= fam.max_summands && !found; ++n) {
        for (const auto &base : bases) {
          std::vector<std::pair<long, std::string>> expr;
          for (const auto &[c, name] : base) expr.push_back({c * n, name});
          SeifertMatrix m = realize(fam, expr);
          if (arf(m) != 0) continue;
          SignatureEngine eng(m);
          RhoValue self = rho_finite(eng, p);
          if (!self.all_regular || !(*self.exact > C)) continue;
          bool earlier_ok = true;
          std::vector<Int> earlier;
          for (const auto &it : seq.items) {
            RhoValue rv = rho_finite(eng, it.prime);
            if (!rv.all_regular || *rv.exact != 0) {
              earlier_ok = false;
              break;
            }
            earlier.push_back(rv.exact->get_num());
          }
          if (!earlier_ok) continue;
          JItem item;
          item.expression = expr;
          item.matrix = std::move(m);
          item.prime = p;
          item.rho_self = self.exact->get_num();
          item.rho_earlier = std::move(earlier);
          item.arf_value = 0;
          seq.items.push_back(std::move(item));
          found = true;
          break;
        }
      }
    }
    if (!found)
      throw SearchExhaustedSeq(
          "no item " + std::to_string(slot + 1) + " within prime bound " +
              std::to_string(prime_max) + " and " +
              std::to_string(fam.max_summands) + " summands",
          seq);
  }
  return seq;
}

VerifyReport verify_sequence(const JSequence &seq) {
  VerifyReport rep;
  auto add = [&rep](const std::string &cond, bool pass,
                    const std::string &detail) {
    rep.entries.push_back({cond, pass, detail});
    rep.all_pass = rep.all_pass && pass;
  };

  long prev = 0;
  for (size_t i = 0; i < seq.items.size(); ++i) {
    const JItem &it = seq.items[i];
    std::string tag = "item " + std::to_string(i + 1) + " (" +
                      expr_to_string(it.expression) + ")";
    bool prime_ok =
        it.prime > prev && it.prime % 2 == 1 && is_prime_int(it.prime);
    add(tag + ": primes strictly increasing and odd", prime_ok,
        "p = " + std::to_string(it.prime));
    prev = it.prime;

    int a = arf(it.matrix);
    add(tag + ": arf = 0", a == 0, "arf = " + std::to_string(a));

    add(tag + ": bounds grope of height 2", it.grope2_assumed,
        "assumption flag; not verifiable from Seifert data");

    SignatureEngine eng(it.matrix);
    RhoValue self = rho_finite(eng, it.prime);
    bool c2 = self.all_regular && *self.exact > seq.constant &&
              self.exact->get_num() == it.rho_self;
    add(tag + ": condition (2) sum > C with regular summands", c2,
        "sum = " + self.exact->get_str() +
            (self.all_regular ? "" : " (singular summand)"));

    for (size_t j = 0; j < i; ++j) {
      RhoValue rv = rho_finite(eng, seq.items[j].prime);
      bool c3 = rv.all_regular && *rv.exact == 0;
      add(tag + ": condition (3) sum = 0 at p_" + std::to_string(j + 1), c3,
          "sum = " + rv.exact->get_str());
    }
  }
  return rep;
}

} // namespace kc
