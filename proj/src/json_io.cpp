#include "kc/json_io.hpp"

#include <filesystem>
#include <fstream>

namespace kc {

Json rat_to_json(const Rat &r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p())
    return Json(r.get_num().get_si());
  return Json(r.get_str());
}

Rat rat_from_json(const Json &j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long>()));
  if (j.is_string()) {
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
  }
  throw std::invalid_argument("expected integer or \"num/den\" string");
}

Json knot_to_json(const SeifertMatrix &k) {
  Json j;
  j["schema"] = 1;
  if (k.name()) j["name"] = *k.name();
  if (k.crossing_number()) j["crossing_number"] = *k.crossing_number();
  Json rows = Json::array();
  for (long i = 0; i < k.size(); ++i) {
    Json row = Json::array();
    for (long c = 0; c < k.size(); ++c) {
      const Int &v = k.matrix().at(i, c);
      if (!v.fits_slong_p())
        row.push_back(v.get_str());
      else
        row.push_back(v.get_si());
    }
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

SeifertMatrix knot_from_json(const Json &j) {
  if (j.contains("name") && !j.contains("matrix")) {
    auto k = named_knot(j["name"].get<std::string>());
    if (!k) throw std::invalid_argument("unknown knot name");
    return *k;
  }
  const Json &rows = j.at("matrix");
  long n = static_cast<long>(rows.size());
  IntMatrix m(n, n);
  for (long i = 0; i < n; ++i) {
    if (static_cast<long>(rows[i].size()) != n)
      throw std::invalid_argument("matrix must be square");
    for (long c = 0; c < n; ++c) {
      const Json &e = rows[i][c];
      m.at(i, c) = e.is_string() ? Int(e.get<std::string>())
                                 : Int(static_cast<long>(e.get<long>()));
    }
  }
  std::optional<std::string> name;
  if (j.contains("name")) name = j["name"].get<std::string>();
  std::optional<long> crossings;
  if (j.contains("crossing_number"))
    crossings = j["crossing_number"].get<long>();
  return SeifertMatrix::from_matrix(std::move(m), name, crossings);
}

Json laurent_to_json(const LaurentPoly &p) {
  Json j;
  j["vars"] = p.vars();
  Json terms = Json::array();
  for (const auto &[e, c] : p.terms()) {
    Json t;
    t["exp"] = e;
    t["coeff"] = rat_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["display"] = p.str();
  return j;
}

Json rho_to_json(const RhoValue &v) {
  Json j;
  j["kind"] = v.kind == RhoValue::Kind::finite_sum ? "finite_sum" : "integral";
  if (v.exact) j["exact"] = rat_to_json(*v.exact);
  j["interval"] = Json::array(
      {rat_to_json(v.interval.lo), rat_to_json(v.interval.hi)});
  j["all_regular"] = v.all_regular;
  return j;
}

GroupPresentation presentation_from_json(const Json &j) {
  std::vector<std::string> gens;
  for (const auto &g : j.at("generators")) gens.push_back(g.get<std::string>());
  std::vector<std::string> rels;
  for (const auto &r : j.at("relators")) rels.push_back(r.get<std::string>());
  return GroupPresentation::make(std::move(gens), rels);
}

CandidateFamily family_from_json(const Json &j) {
  CandidateFamily f;
  for (const auto &g : j.at("generators")) {
    SeifertMatrix m = knot_from_json(g);
    if (!m.name())
      throw std::invalid_argument("family generators need names");
    f.generators.push_back(std::move(m));
  }
  if (j.contains("max_summands")) f.max_summands = j["max_summands"].get<long>();
  return f;
}

Json jsequence_to_json(const JSequence &seq) {
  Json j;
  j["schema"] = 1;
  j["constant"] = rat_to_json(seq.constant);
  Json items = Json::array();
  for (const auto &it : seq.items) {
    Json e;
    Json expr = Json::array();
    for (const auto &[c, n] : it.expression)
      expr.push_back(Json::array({c, n}));
    e["expression"] = std::move(expr);
    e["expression_display"] = expr_to_string(it.expression);
    e["matrix"] = knot_to_json(it.matrix)["matrix"];
    e["prime"] = it.prime;
    e["rho_self"] = it.rho_self.get_str();
    Json earlier = Json::array();
    for (const auto &v : it.rho_earlier) earlier.push_back(v.get_str());
    e["rho_earlier"] = std::move(earlier);
    e["arf"] = it.arf_value;
    e["grope2_assumed"] = it.grope2_assumed;
    items.push_back(std::move(e));
  }
  j["items"] = std::move(items);
  return j;
}

JSequence jsequence_from_json(const Json &j) {
  JSequence seq;
  seq.constant = rat_from_json(j.at("constant"));
  for (const auto &e : j.at("items")) {
    JItem it;
    for (const auto &pair : e.at("expression"))
      it.expression.push_back(
          {pair[0].get<long>(), pair[1].get<std::string>()});
    Json km;
    km["matrix"] = e.at("matrix");
    it.matrix = knot_from_json(km);
    it.prime = e.at("prime").get<long>();
    it.rho_self = Int(e.at("rho_self").get<std::string>());
    for (const auto &v : e.at("rho_earlier"))
      it.rho_earlier.push_back(Int(v.get<std::string>()));
    it.arf_value = e.at("arf").get<int>();
    if (e.contains("grope2_assumed"))
      it.grope2_assumed = e["grope2_assumed"].get<bool>();
    seq.items.push_back(std::move(it));
  }
  return seq;
}

Json verify_report_to_json(const VerifyReport &rep) {
  Json j;
  j["all_pass"] = rep.all_pass;
  Json entries = Json::array();
  for (const auto &e : rep.entries) {
    Json x;
    x["condition"] = e.condition;
    x["pass"] = e.pass;
    x["detail"] = e.detail;
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  return j;
}

FamilyConfig family_config_from_json(const Json &j,
                                     const std::string &base_dir) {
  FamilyConfig cfg;
  cfg.seed = knot_from_json(j.at("seed"));
  for (const auto &a : j.at("axes")) {
    AxisSpec ax;
    ax.label = a.at("label").get<std::string>();
    ax.word = FreeWord::parse(a.at("word").get<std::string>());
    ax.derived_depth = a.at("depth").get<int>();
    cfg.axes.push_back(std::move(ax));
  }
  const Json &js = j.at("jsequence");
  if (js.is_string()) {
    std::filesystem::path p(js.get<std::string>());
    if (p.is_relative() && !base_dir.empty())
      p = std::filesystem::path(base_dir) / p;
    cfg.jsequence = jsequence_from_json(load_json_file(p.string()));
  } else {
    cfg.jsequence = jsequence_from_json(js);
  }
  return cfg;
}

Json satellite_to_json(const SatelliteDesc &d) {
  Json j;
  j["schema"] = 1;
  j["name"] = d.name();
  j["seed"] = knot_to_json(d.seed);
  Json axes = Json::array();
  for (const auto &a : d.axes) {
    Json x;
    x["label"] = a.label;
    x["word"] = a.word.str();
    x["depth"] = a.derived_depth;
    x["capped_grope_assumed"] = a.capped_grope_assumed;
    x["unlink_assumed"] = a.unlink_assumed;
    axes.push_back(std::move(x));
  }
  j["axes"] = std::move(axes);
  j["infection"] = d.infection_expr;
  j["level"] = d.level;
  return j;
}

Json certificate_to_json(const Certificate &c) {
  Json j;
  j["schema"] = 1;
  j["coeffs"] = c.coeffs;
  j["lead_index"] = c.lead_index;
  j["flipped"] = c.flipped;
  j["m_axes"] = c.m_axes;
  j["lead_prime"] = c.lead_prime;
  j["sigma_lead"] = c.sigma_lead.get_str();
  j["constant"] = rat_to_json(c.constant);
  j["axioms"] = c.axioms;
  j["zeroed_blocks"] = c.zeroed_blocks;
  Json rows = Json::array();
  for (const auto &s : c.scenarios) {
    Json r;
    r["v1_nontrivial_axes"] = s.v1_count;
    r["w_block_nontrivial_axes"] = s.w_counts;
    r["total"] = s.total.get_str();
    r["multiplicity"] = s.multiplicity.get_str();
    r["passes"] = s.passes;
    rows.push_back(std::move(r));
  }
  j["admissible_scenarios"] = std::move(rows);
  Json w;
  w["v1_nontrivial_axes"] = c.trivial_witness.v1_count;
  w["total"] = c.trivial_witness.total.get_str();
  w["note"] = "all orders 1: the inequality chain collapses; this scenario "
              "is excluded by the axis-nontriviality hypothesis";
  j["trivial_scenario_witness"] = std::move(w);
  j["verdict"] = c.valid ? "valid" : "invalid";
  return j;
}

Json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

} // namespace kc
