#include "kc/infection.hpp"

#include "kc/errors.hpp"

#include <sstream>

namespace kc {

void validate_axis(const AxisSpec &axis, int rank) {
  if (axis.derived_depth < 1)
    throw DepthZeroAxis("axis " + axis.label + " claims depth < 1");
  if (axis.word.is_identity())
    throw std::invalid_argument("axis " + axis.label + " is the identity");
  // Free-group depth n-1 maps into knot-group depth n.
  if (!in_derived_subgroup(axis.word, rank, axis.derived_depth - 1))
    throw DepthZeroAxis("axis " + axis.label +
                        " word is not in F^(" +
                        std::to_string(axis.derived_depth - 1) + ")");
}

std::string SatelliteDesc::name() const {
  std::ostringstream os;
  os << (seed.name() ? *seed.name() : "seed") << "(";
  for (size_t i = 0; i < axes.size(); ++i) {
    if (i) os << ",";
    os << axes[i].label;
  }
  os << ";" << infection_expr << ")";
  return os.str();
}

std::vector<SatelliteDesc> build_family(const SeifertMatrix &seed,
                                        const std::vector<AxisSpec> &axes,
                                        const JSequence &seq) {
  if (axes.empty()) throw std::invalid_argument("need at least one axis");
  if (seq.items.empty()) throw std::invalid_argument("empty J-sequence");

  long span = alexander_span(seed);
  if (span <= 2)
    throw SeedDegreeTooSmall("deg Delta = " + std::to_string(span) +
                             "; the construction needs deg > 2");
  Int top = alexander_top_coefficient(seed);
  if (!(Int(seq.items.front().prime) > abs(top)))
    throw PrimeTooSmall("first prime " +
                        std::to_string(seq.items.front().prime) +
                        " must exceed the top coefficient " + top.get_str());

  int rank = static_cast<int>(seed.size());
  int level = 0;
  for (const auto &a : axes) {
    validate_axis(a, rank);
    level = level == 0 ? a.derived_depth : std::min(level, a.derived_depth);
  }
  if (level < 2)
    throw DepthZeroAxis("axes must have derived depth >= 2");

  std::vector<SatelliteDesc> fam;
  for (const auto &item : seq.items) {
    if (arf(item.matrix) != 0)
      throw ArfNonzeroInfection("infection knot " +
                                expr_to_string(item.expression) +
                                " has arf = 1");
    SatelliteDesc d;
    d.seed = seed;
    d.axes = axes;
    d.infection = item.matrix;
    d.infection_expr = expr_to_string(item.expression);
    d.level = level;
    fam.push_back(std::move(d));
  }
  return fam;
}

TransferRecord derived_invariants(const SatelliteDesc &desc) {
  for (const auto &a : desc.axes)
    if (a.derived_depth < 1)
      throw DepthZeroAxis("axis " + a.label + " has depth 0");
  TransferRecord rec;
  rec.alexander = alexander_poly(desc.seed);
  rec.signature_value = signature(desc.seed);
  rec.arf_value = arf(desc.seed);
  rec.rules = {
      "alexander: axes have zero winding, infection leaves the Seifert form",
      "signature: equal to the seed's",
      "lt_signature: equal to the seed's at every omega",
      "arf: equal to the seed's",
  };
  return rec;
}

LtResult transfer_lt_signature(const SatelliteDesc &desc,
                               const RootOfUnity &omega) {
  for (const auto &a : desc.axes)
    if (a.derived_depth < 1)
      throw DepthZeroAxis("axis " + a.label + " has depth 0");
  return lt_signature(desc.seed, omega);
}

FormalSum linear_combination(const std::vector<long> &coeffs,
                             const std::vector<SatelliteDesc> &descs) {
  if (coeffs.size() != descs.size())
    throw std::invalid_argument("one coefficient per description");
  long lead = -1;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) {
      lead = static_cast<long>(i);
      break;
    }
  if (lead < 0) throw AllZero("all coefficients zero");
  for (size_t i = 1; i < descs.size(); ++i) {
    if (!(descs[i].seed == descs[0].seed))
      throw std::invalid_argument("descriptions must share the seed");
    if (descs[i].axes.size() != descs[0].axes.size())
      throw std::invalid_argument("descriptions must share the axes");
  }

  FormalSum s;
  s.coeffs = coeffs;
  s.descs = descs;
  s.lead_index = lead;
  s.b.resize(coeffs.size(), 0);
  s.eps.resize(coeffs.size(), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) {
    long a = coeffs[i];
    s.eps[i] = a > 0 ? 1 : (a < 0 ? -1 : 0);
    if (static_cast<long>(i) == lead)
      s.b[i] = std::labs(a) - 1;
    else
      s.b[i] = std::labs(a);
  }
  return s;
}

} // namespace kc
