#pragma once
#include "kc/freeword.hpp"
#include "kc/jsequence.hpp"
#include "kc/laurent.hpp"
#include "kc/seifert.hpp"

#include <string>
#include <vector>

namespace kc {

// Axis curve for infection, as a word in the free group carrying pi_1 of the
// Seifert-surface complement.  `derived_depth` is the asserted depth in the
// knot group; words of structural depth n-1 in the free group map to depth n
// there.  Geometric conditions that cannot be read off a word are carried as
// assumption flags.
struct AxisSpec {
  std::string label;
  FreeWord word;
  int derived_depth = 0;
  bool capped_grope_assumed = true;
  bool unlink_assumed = true;
};

// Checks the depth claim (exact for claims <= 3, structural certificate
// search above).  Throws UnsupportedLevel when the claim cannot be decided.
void validate_axis(const AxisSpec &axis, int rank);

// Symbolic satellite K(eta_1, ..., eta_m; J): seed, axes, and the infection
// knot assigned to every axis.
struct SatelliteDesc {
  SeifertMatrix seed;
  std::vector<AxisSpec> axes;
  SeifertMatrix infection;
  std::string infection_expr;
  int level = 0; // n

  std::string name() const;
};

// One description per sequence item, sharing seed and axes.
std::vector<SatelliteDesc> build_family(const SeifertMatrix &seed,
                                        const std::vector<AxisSpec> &axes,
                                        const JSequence &seq);

// Classical invariants transfer from the seed unchanged for axes of depth
// >= 1 with zero winding.
struct TransferRecord {
  LaurentPoly alexander;
  long signature_value = 0;
  int arf_value = 0;
  std::vector<std::string> rules;
};
TransferRecord derived_invariants(const SatelliteDesc &desc);
LtResult transfer_lt_signature(const SatelliteDesc &desc,
                               const RootOfUnity &omega);

// Formal integer combination #_i a_i K_i with the bookkeeping used by the
// independence argument: with i0 the first nonzero coefficient (normalized
// positive), b_{i0} = a_{i0} - 1 and b_i = |a_i| afterwards.
struct FormalSum {
  std::vector<long> coeffs;
  std::vector<SatelliteDesc> descs;
  long lead_index = 0;
  std::vector<long> b;
  std::vector<int> eps; // signs of the nonzero a_i
};
FormalSum linear_combination(const std::vector<long> &coeffs,
                             const std::vector<SatelliteDesc> &descs);

} // namespace kc
