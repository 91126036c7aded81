#include "kc/ledger.hpp"

#include "kc/errors.hpp"
#include "kc/rho.hpp"

#include <cassert>
#include <mutex>

namespace kc {

namespace {

long count_true(const AxisOrders &v) {
  long n = 0;
  for (bool b : v)
    if (b) ++n;
  return n;
}

Int binomial(long n, long k) {
  Int r(1);
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

// Verified rho values of one sequence item at the lead prime.
struct LeadData {
  Int sigma;                 // rho_finite(J_lead, p_lead)
  std::vector<Int> at_lead;  // rho_finite(J_i, p_lead) for every item
};

std::string rho_key(const SeifertMatrix &m, long p) {
  std::string s = std::to_string(p) + "|" + std::to_string(m.size()) + ":";
  for (const auto &v : m.matrix().a) {
    s += v.get_str();
    s += ',';
  }
  return s;
}

Int rho_cached(const SeifertMatrix &m, long p) {
  static std::mutex mu;
  static std::map<std::string, Int> cache;
  std::string key = rho_key(m, p);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Int v = rho_finite(m, p).exact->get_num();
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::move(key), v);
  return v;
}

LeadData lead_data(const FormalSum &J, const JSequence &seq) {
  LeadData d;
  long lead = J.lead_index;
  if (lead >= static_cast<long>(seq.items.size()))
    throw DimensionMismatch("combination references items beyond sequence");
  long p = seq.items[lead].prime;
  for (const auto &item : seq.items) d.at_lead.push_back(rho_cached(item.matrix, p));
  d.sigma = d.at_lead[lead];
  return d;
}

} // namespace

ContributionRecord block_contributions(const FormalSum &J,
                                       const JSequence &seq,
                                       const Scenario &s) {
  long m = static_cast<long>(J.descs.empty() ? 0 : J.descs[0].axes.size());
  if (static_cast<long>(s.v1_orders.size()) != m)
    throw DimensionMismatch("V_1 orders must match the axis count");
  long lead = J.lead_index;
  if (static_cast<long>(J.coeffs.size()) > static_cast<long>(seq.items.size()))
    throw DimensionMismatch("more coefficients than sequence items");
  long b_lead = J.b[lead];
  if (static_cast<long>(s.w_lead_orders.size()) != b_lead)
    throw DimensionMismatch("need one order vector per W block copy");

  LeadData d = lead_data(J, seq);
  ContributionRecord rec;
  rec.total = 0;

  rec.blocks.push_back(
      {"V (n.5-solution)", Int(0), "amenable signature theorem axiom"});
  rec.blocks.push_back({"E (standard cobordism)", Int(0),
                        "Coker{H_2(boundary) -> H_2(E)} = 0"});

  // V_1: -sum over axes of rho(M(J_lead), phi_i), order p terms only.
  Int v1 = -d.sigma * count_true(s.v1_orders);
  rec.blocks.push_back({"V_1 (cylinder)", v1,
                        "order-p axes contribute rho_finite(J_lead, p)"});
  rec.total += v1;

  for (long r = 0; r < b_lead; ++r) {
    if (static_cast<long>(s.w_lead_orders[r].size()) != m)
      throw DimensionMismatch("W block orders must match the axis count");
    // W_lead^r = -W_lead since the lead coefficient is normalized positive.
    Int w = -d.sigma * count_true(s.w_lead_orders[r]);
    rec.blocks.push_back({"W_lead^" + std::to_string(r + 1), w,
                          "mirror copy of the lead block"});
    rec.total += w;
  }

  for (size_t i = 0; i < J.coeffs.size(); ++i) {
    if (static_cast<long>(i) == lead || J.coeffs[i] == 0) continue;
    // Every rho term of these blocks is rho_finite(J_i, p_lead) = 0 by the
    // verified vanishing condition, independent of the orders.
    assert(d.at_lead[i] == 0);
    rec.blocks.push_back({"W_" + std::to_string(i + 1) + " blocks (x" +
                              std::to_string(J.b[i]) + ")",
                          Int(0),
                          "rho_finite(J_" + std::to_string(i + 1) +
                              ", p_lead) = 0"});
  }
  return rec;
}

Certificate certify(const FormalSum &J, const JSequence &seq, const Rat &C) {
  Certificate cert;
  cert.constant = C;

  // Normalize the lead coefficient positive (taking the inverse combination
  // when needed).
  FormalSum work = J;
  long lead = work.lead_index;
  if (work.coeffs[lead] == 0)
    throw NormalizationFailure("lead coefficient vanished");
  if (work.coeffs[lead] < 0) {
    for (auto &c : work.coeffs) c = -c;
    for (auto &e : work.eps) e = -e;
    cert.flipped = true;
  }
  cert.coeffs = work.coeffs;
  cert.lead_index = lead;
  work.b.assign(work.coeffs.size(), 0);
  for (size_t i = 0; i < work.coeffs.size(); ++i)
    work.b[i] = static_cast<long>(i) == lead ? std::labs(work.coeffs[i]) - 1
                                             : std::labs(work.coeffs[i]);

  if (static_cast<long>(seq.items.size()) < static_cast<long>(work.coeffs.size()))
    throw DimensionMismatch("sequence shorter than the combination");

  LeadData d = lead_data(work, seq);
  for (size_t i = 0; i < work.coeffs.size(); ++i)
    if (static_cast<long>(i) != lead && work.coeffs[i] != 0 &&
        d.at_lead[i] != 0)
      throw DimensionMismatch(
          "vanishing condition fails at a non-lead block; sequence invalid");

  cert.lead_prime = seq.items[lead].prime;
  cert.sigma_lead = d.sigma;
  if (!(Rat(d.sigma) > C))
    throw SequenceBoundTooSmall("rho_finite(J_lead, p_lead) = " +
                                d.sigma.get_str() + " is not above C = " +
                                C.get_str());

  long m = static_cast<long>(work.descs[0].axes.size());
  cert.m_axes = m;
  long b_lead = work.b[lead];

  cert.axioms = {
      "S(V) = 0: amenable signature theorem applied to the n.5-solution",
      "S(E) = 0: the standard cobordism contributes no defect",
      "seed block rho(M(K), phi) lies in [-C, C] (universal bound), carried "
      "symbolically",
      "orders of phi(eta_i) are 1 or p (mixed-coefficient series at level "
      "n+1)",
  };
  for (size_t i = 0; i < work.coeffs.size(); ++i)
    if (static_cast<long>(i) != lead && work.coeffs[i] != 0)
      cert.zeroed_blocks.push_back(
          "W_" + std::to_string(i + 1) + " blocks (x" +
          std::to_string(work.b[i]) +
          "): zero by the verified vanishing at the lead prime");

  // Scenario classes: totals depend only on per-block nontrivial counts.
  // V_1 takes k in 1..m (admissibility), each of the b_lead W copies takes
  // 0..m.
  std::vector<long> wc(b_lead, 0);
  bool valid = true;
  for (long k = 1; k <= m; ++k) {
    std::fill(wc.begin(), wc.end(), 0);
    for (;;) {
      ScenarioRow row;
      row.v1_count = k;
      row.w_counts = wc;
      Int total = -d.sigma * k;
      Int mult = binomial(m, k);
      for (long r = 0; r < b_lead; ++r) {
        total += -d.sigma * wc[r];
        mult *= binomial(m, wc[r]);
      }
      row.total = total;
      row.multiplicity = mult;
      row.passes = (total <= -d.sigma) && (abs(total) > C);
      valid = valid && row.passes;
      cert.scenarios.push_back(std::move(row));

      long pos = b_lead - 1;
      while (pos >= 0 && wc[pos] == m) wc[pos--] = 0;
      if (pos < 0) break;
      ++wc[pos];
    }
  }

  // The inadmissible all-trivial scenario: every block contributes zero, so
  // the chain of inequalities collapses; this is why the axis-nontriviality
  // hypothesis is required.
  cert.trivial_witness.v1_count = 0;
  cert.trivial_witness.w_counts.assign(b_lead, 0);
  cert.trivial_witness.total = 0;
  cert.trivial_witness.multiplicity = 1;
  cert.trivial_witness.passes = false;

  cert.valid = valid;
  return cert;
}

bool bound_check(const SeifertMatrix &seed, const Rat &C_claimed) {
  if (!seed.crossing_number())
    throw MissingCrossingNumber("seed carries no crossing number");
  return C_claimed >= Rat(cheeger_gromov_bound(*seed.crossing_number()));
}

} // namespace kc
