#pragma once
#include "kc/infection.hpp"

#include <string>
#include <vector>

namespace kc {

// One assignment of representation orders to the axes of a block: each axis
// order is 1 or p (the lead prime); `true` marks order p.
using AxisOrders = std::vector<bool>;

struct Scenario {
  AxisOrders v1_orders;                 // the V_1 cylinder block
  std::vector<AxisOrders> w_lead_orders; // the b_lead copies of -W_lead
  bool v1_nontrivial() const {
    for (bool b : v1_orders)
      if (b) return true;
    return false;
  }
};

// Per-block signature-defect contributions of one scenario, with every rho
// term resolved through the abelian formula.
struct BlockContribution {
  std::string block;
  Int value;
  std::string origin;
};

struct ContributionRecord {
  std::vector<BlockContribution> blocks;
  Int total; // sum over blocks; the seed term is carried as [-C, C] aside
};

ContributionRecord block_contributions(const FormalSum &J, const JSequence &seq,
                                       const Scenario &s);

// Scenario classes indexed by nontrivial-axis counts (contributions depend
// only on counts; multiplicity records how many raw scenarios collapse here).
struct ScenarioRow {
  long v1_count = 0;
  std::vector<long> w_counts;
  Int total;
  Int multiplicity;
  bool passes = false; // total <= -Sigma and |total| > C
};

struct Certificate {
  std::vector<long> coeffs;
  long lead_index = 0;
  bool flipped = false; // combination negated to make the lead positive
  long m_axes = 0;
  long lead_prime = 0;
  Int sigma_lead;  // rho_finite(J_lead, p_lead), re-verified > C
  Rat constant;    // the bound C
  std::vector<ScenarioRow> scenarios; // admissible classes
  ScenarioRow trivial_witness;        // the all-orders-1 counterexample
  std::vector<std::string> axioms;
  std::vector<std::string> zeroed_blocks; // i > lead blocks, zero by (3)
  bool valid = false;
};

// Quantify over every admissible scenario (some axis nontrivial in V_1) and
// confirm each total is <= -sigma_lead < -C; the all-trivial scenario is
// recorded as the witness for why the nontriviality hypothesis is needed.
Certificate certify(const FormalSum &J, const JSequence &seq, const Rat &C);

// C_claimed is at least the universal bound for the seed's crossing number.
bool bound_check(const SeifertMatrix &seed, const Rat &C_claimed);

} // namespace kc
