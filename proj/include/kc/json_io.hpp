#pragma once
#include "kc/commutator.hpp"
#include "kc/infection.hpp"
#include "kc/jsequence.hpp"
#include "kc/ledger.hpp"
#include "kc/rho.hpp"

#include <json.hpp>

namespace kc {

using Json = nlohmann::ordered_json;

// All documents carry {"schema": 1}.  Exact rationals are serialized as
// "num/den" strings so nothing is rounded through doubles.

Json rat_to_json(const Rat &r);
Rat rat_from_json(const Json &j);

Json knot_to_json(const SeifertMatrix &k);
SeifertMatrix knot_from_json(const Json &j);

Json laurent_to_json(const LaurentPoly &p);

Json rho_to_json(const RhoValue &v);

GroupPresentation presentation_from_json(const Json &j);

CandidateFamily family_from_json(const Json &j);
Json jsequence_to_json(const JSequence &seq);
JSequence jsequence_from_json(const Json &j);
Json verify_report_to_json(const VerifyReport &rep);

// Satellite family config: {"seed": knot, "axes": [{label, word, depth}],
// "jsequence": inline document or path}.
struct FamilyConfig {
  SeifertMatrix seed;
  std::vector<AxisSpec> axes;
  JSequence jsequence;
};
FamilyConfig family_config_from_json(const Json &j,
                                     const std::string &base_dir);
Json satellite_to_json(const SatelliteDesc &d);

Json certificate_to_json(const Certificate &c);

Json load_json_file(const std::string &path);

} // namespace kc
