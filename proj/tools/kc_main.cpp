#include "kc/errors.hpp"
#include "kc/fox.hpp"
#include "kc/json_io.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace kc;

namespace {

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
};

CoeffSpec parse_coeff(const std::string &s) {
  if (s == "q" || s == "Q" || s == "rationals") return CoeffSpec::rationals();
  if (s.rfind("zp:", 0) == 0) return CoeffSpec::mod_p(std::stol(s.substr(3)));
  throw std::invalid_argument("coefficients must be q or zp:<prime>");
}

Json error_json(const std::string &code, const std::string &message) {
  Json j;
  j["error"] = code;
  j["message"] = message;
  return j;
}

void emit(const Options &opt, const Json &j,
          const std::function<void()> &table) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    table();
}

int run_invariants(const Options &opt, const std::string &path) {
  SeifertMatrix k = knot_from_json(load_json_file(path));
  LaurentPoly delta = alexander_poly(k);
  Json j;
  j["schema"] = 1;
  if (k.name()) j["name"] = *k.name();
  j["size"] = k.size();
  j["genus"] = k.genus();
  j["alexander"] = laurent_to_json(delta);
  j["alexander_span"] = alexander_span(k);
  j["alexander_top_coefficient"] = alexander_top_coefficient(k).get_str();
  j["signature"] = signature(k);
  j["arf"] = arf(k);
  emit(opt, j, [&] {
    if (k.name()) std::cout << "knot:       " << *k.name() << "\n";
    std::cout << "size:       " << k.size() << "  (genus " << k.genus()
              << ")\n";
    std::cout << "alexander:  " << delta.str() << "   (span "
              << alexander_span(k) << ", top "
              << alexander_top_coefficient(k).get_str() << ")\n";
    std::cout << "signature:  " << signature(k) << "\n";
    std::cout << "arf:        " << arf(k) << "\n";
  });
  return 0;
}

int run_lt_profile(const Options &opt, const std::string &path, int prec) {
  SeifertMatrix k = knot_from_json(load_json_file(path));
  CircleProfile prof = lt_profile(k, prec);
  Json j;
  j["schema"] = 1;
  j["all_rational"] = prof.all_rational;
  Json jumps = Json::array();
  for (const auto &jp : prof.jumps) {
    Json e;
    if (jp.rational) {
      e["fraction"] = rat_to_json(jp.fraction);
      e["cyclotomic_order"] = jp.cyclotomic_order;
    } else {
      e["fraction_interval"] = Json::array(
          {rat_to_json(jp.enclosure.lo), rat_to_json(jp.enclosure.hi)});
    }
    jumps.push_back(std::move(e));
  }
  j["jumps"] = std::move(jumps);
  j["sigma_after_jump"] = prof.sigma;
  j["sigma_at_one"] = prof.sigma_at_one;
  emit(opt, j, [&] {
    std::cout << "arc through omega=1: sigma = " << prof.sigma_at_one << "\n";
    for (size_t i = 0; i < prof.jumps.size(); ++i) {
      const auto &jp = prof.jumps[i];
      if (jp.rational)
        std::cout << "jump at " << jp.fraction.get_str() << " (order "
                  << jp.cyclotomic_order << ")";
      else
        std::cout << "jump in [" << jp.enclosure.lo.get_str() << ", "
                  << jp.enclosure.hi.get_str() << "]";
      std::cout << " -> sigma = " << prof.sigma[i] << "\n";
    }
  });
  return 0;
}

int run_rho(const Options &opt, const std::string &path, long finite_d,
            bool integral, int prec) {
  SeifertMatrix k = knot_from_json(load_json_file(path));
  RhoValue v = integral ? rho_integral(k, prec) : rho_finite(k, finite_d);
  Json j = rho_to_json(v);
  j["schema"] = 1;
  emit(opt, j, [&] {
    if (v.exact)
      std::cout << "rho = " << v.exact->get_str() << "\n";
    else
      std::cout << "rho in [" << v.interval.lo.get_str() << ", "
                << v.interval.hi.get_str() << "]\n";
    if (!v.all_regular)
      std::cout << "note: a summand sat on a singular omega\n";
  });
  return 0;
}

int run_bound(const Options &opt, long crossings, const std::string &path,
              const std::string &check) {
  if (!path.empty()) {
    SeifertMatrix k = knot_from_json(load_json_file(path));
    if (!k.crossing_number())
      throw MissingCrossingNumber("knot document has no crossing_number");
    crossings = *k.crossing_number();
  }
  Int bound = cheeger_gromov_bound(crossings);
  Json j;
  j["schema"] = 1;
  j["crossing_number"] = crossings;
  j["bound"] = bound.get_str();
  bool ok = true;
  if (!check.empty()) {
    Rat c(check);
    c.canonicalize();
    ok = c >= Rat(bound);
    j["claimed"] = check;
    j["claim_sufficient"] = ok;
  }
  emit(opt, j, [&] {
    std::cout << "bound = 69713280 * " << crossings << " = " << bound.get_str()
              << "\n";
    if (!check.empty())
      std::cout << "claimed " << check << ": "
                << (ok ? "sufficient" : "insufficient") << "\n";
  });
  return 0;
}

int run_jseq(const Options &opt, const std::string &constant, long count,
             long pmax, long pmin, const std::string &family_path,
             long max_summands) {
  CandidateFamily fam =
      family_path.empty() ? default_family()
                          : family_from_json(load_json_file(family_path));
  if (max_summands > 0) fam.max_summands = max_summands;
  Rat C(constant);
  C.canonicalize();
  JSequence seq = find_sequence(C, count, fam, pmax, pmin);
  VerifyReport rep = verify_sequence(seq);
  Json j = jsequence_to_json(seq);
  j["verification"] = verify_report_to_json(rep);
  emit(opt, j, [&] {
    for (size_t i = 0; i < seq.items.size(); ++i) {
      const auto &it = seq.items[i];
      std::cout << "J_" << i + 1 << " = " << expr_to_string(it.expression)
                << "   p_" << i + 1 << " = " << it.prime
                << "   rho = " << it.rho_self.get_str() << "\n";
    }
    std::cout << "verification: " << (rep.all_pass ? "all pass" : "FAILED")
              << " (" << rep.entries.size() << " conditions)\n";
  });
  return rep.all_pass ? 0 : 1;
}

int run_family(const Options &opt, const std::string &config_path) {
  std::string base = std::filesystem::path(config_path).parent_path().string();
  FamilyConfig cfg =
      family_config_from_json(load_json_file(config_path), base);
  auto fam = build_family(cfg.seed, cfg.axes, cfg.jsequence);
  Json j;
  j["schema"] = 1;
  Json arr = Json::array();
  for (const auto &d : fam) {
    Json e = satellite_to_json(d);
    TransferRecord rec = derived_invariants(d);
    Json inv;
    inv["alexander"] = laurent_to_json(rec.alexander);
    inv["signature"] = rec.signature_value;
    inv["arf"] = rec.arf_value;
    inv["transfer_rules"] = rec.rules;
    e["invariants"] = std::move(inv);
    arr.push_back(std::move(e));
  }
  j["family"] = std::move(arr);
  emit(opt, j, [&] {
    for (const auto &d : fam) std::cout << d.name() << "\n";
    std::cout << fam.size()
              << " satellite description(s); invariants transfer from the "
                 "seed\n";
  });
  return 0;
}

int run_fox_derive(const Options &opt, const std::string &word, int gen) {
  FreeWord w = FreeWord::parse(word);
  WordSum d = fox_derivative(w, gen);
  LaurentPoly proj = project_level1(d, CoeffSpec::rationals(),
                                    std::max(w.max_generator(), gen));
  Json j;
  j["schema"] = 1;
  j["word"] = w.str();
  j["generator"] = gen;
  Json terms = Json::array();
  for (const auto &[u, c] : d) {
    Json t;
    t["word"] = u.str();
    t["coeff"] = c.get_str();
    terms.push_back(std::move(t));
  }
  j["derivative"] = std::move(terms);
  j["abelianized"] = laurent_to_json(proj);
  emit(opt, j, [&] {
    std::cout << "d_" << gen << "(" << w.str() << ") =";
    bool first = true;
    for (const auto &[u, c] : d) {
      std::cout << (first ? " " : " + ") << c.get_str() << "*" << u.str();
      first = false;
    }
    if (first) std::cout << " 0";
    std::cout << "\nabelianized: " << proj.str() << "\n";
  });
  return 0;
}

int run_fox_wedge(const Options &opt, long circles, const std::string &images,
                  const std::string &coeffs) {
  std::vector<std::vector<long>> im;
  std::stringstream ss(images);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::vector<long> v;
    std::stringstream ps(part);
    std::string x;
    while (std::getline(ps, x, ',')) v.push_back(std::stol(x));
    im.push_back(std::move(v));
  }
  auto r = wedge_rank_check(circles, im, parse_coeff(coeffs), opt.seed);
  Json j;
  j["schema"] = 1;
  j["computed_rank"] = r.computed;
  j["expected"] = r.expected;
  j["matches"] = r.matches;
  emit(opt, j, [&] {
    std::cout << "rank H_1 = " << r.computed
              << " (expected m-1 = " << r.expected << ") "
              << (r.matches ? "ok" : "MISMATCH") << "\n";
  });
  return 0;
}

int run_tuples(const Options &opt, int level, int genus, long limit) {
  std::optional<long> lim;
  if (limit > 0) lim = limit;
  TupleCollection col = tuples_P(level, genus, lim);
  Json j;
  j["schema"] = 1;
  j["level"] = col.level;
  j["genus"] = col.genus;
  j["full_count"] = col.full_count.get_str();
  j["enumerated"] = col.tuples.size();
  j["truncated"] = col.truncated;
  Json arr = Json::array();
  for (const auto &t : col.tuples) {
    Json words = Json::array();
    for (size_t i = 0; i < t.words.size(); ++i) {
      Json w;
      w["expr"] = t.exprs[i]->str();
      w["word"] = t.words[i].str();
      words.push_back(std::move(w));
    }
    arr.push_back(std::move(words));
  }
  j["tuples"] = std::move(arr);
  emit(opt, j, [&] {
    std::cout << "|P_" << level << "| = " << col.full_count.get_str()
              << " at genus " << genus << "; enumerated " << col.tuples.size()
              << (col.truncated ? " (truncated)" : "") << "\n";
    for (const auto &t : col.tuples) {
      std::cout << "{";
      for (size_t i = 0; i < t.words.size(); ++i)
        std::cout << (i ? ", " : " ") << t.exprs[i]->str();
      std::cout << " }\n";
    }
  });
  return 0;
}

int run_indep(const Options &opt, const std::string &words,
              const std::string &coeffs) {
  std::vector<FreeWord> tuple;
  std::stringstream ss(words);
  std::string part;
  while (std::getline(ss, part, ',')) tuple.push_back(FreeWord::parse(part));
  auto r = independence_test(tuple, parse_coeff(coeffs), opt.seed);
  Json j;
  j["schema"] = 1;
  j["independent"] = r.independent;
  j["rank"] = r.rank;
  Json m = Json::array();
  for (const auto &row : r.matrix) {
    Json jr = Json::array();
    for (const auto &e : row) jr.push_back(e.str());
    m.push_back(std::move(jr));
  }
  j["matrix"] = std::move(m);
  emit(opt, j, [&] {
    std::cout << (r.independent ? "independent" : "dependent") << " (rank "
              << r.rank << " of " << tuple.size() << ")\n";
  });
  return 0;
}

int run_membership(const Options &opt, const std::string &pres_path,
                   const std::string &word, int level,
                   const std::string &coeffs) {
  GroupPresentation G = presentation_from_json(load_json_file(pres_path));
  FreeWord w = FreeWord::parse(word);
  std::vector<std::string> parts;
  std::stringstream ss(coeffs);
  std::string part;
  while (std::getline(ss, part, ',')) parts.push_back(part);
  bool result;
  if (level == 1) {
    result = member_P1(G, w, parse_coeff(parts.at(0)));
  } else if (level == 2) {
    if (parts.size() != 2)
      throw std::invalid_argument("level 2 needs --coeffs R0,R1");
    result = member_P2(G, w, parse_coeff(parts[0]), parse_coeff(parts[1]));
  } else {
    throw UnsupportedLevel("membership levels beyond 2 are not implemented");
  }
  Json j;
  j["schema"] = 1;
  j["word"] = w.str();
  j["level"] = level;
  j["member"] = result;
  emit(opt, j, [&] {
    std::cout << w.str() << (result ? " is " : " is not ") << "in P^" << level
              << "G\n";
  });
  return 0;
}

int run_certify(const Options &opt, const std::string &config_path,
                const std::string &coeff_list, const std::string &constant) {
  std::string base = std::filesystem::path(config_path).parent_path().string();
  FamilyConfig cfg =
      family_config_from_json(load_json_file(config_path), base);

  // A certificate over a tampered sequence is worthless: re-verify first.
  VerifyReport rep = verify_sequence(cfg.jsequence);
  if (!rep.all_pass) {
    Json j = error_json("InvalidSequence",
                        "the J-sequence fails re-verification");
    j["verification"] = verify_report_to_json(rep);
    std::cout << j.dump(2) << "\n";
    return 1;
  }

  auto fam = build_family(cfg.seed, cfg.axes, cfg.jsequence);

  std::vector<long> a;
  std::stringstream ss(coeff_list);
  std::string part;
  while (std::getline(ss, part, ',')) a.push_back(std::stol(part));
  if (a.size() > fam.size())
    throw DimensionMismatch("more coefficients than family members");
  std::vector<SatelliteDesc> used(fam.begin(), fam.begin() + a.size());
  FormalSum J = linear_combination(a, used);

  Rat C;
  if (constant == "auto") {
    if (!cfg.seed.crossing_number())
      throw MissingCrossingNumber("constant auto needs a seed crossing number");
    C = Rat(cheeger_gromov_bound(*cfg.seed.crossing_number()));
  } else {
    C = Rat(constant);
    C.canonicalize();
  }

  Certificate cert = certify(J, cfg.jsequence, C);
  Json j = certificate_to_json(cert);
  emit(opt, j, [&] {
    std::cout << "sigma_lead = " << cert.sigma_lead.get_str()
              << " at p = " << cert.lead_prime
              << ", C = " << cert.constant.get_str() << "\n";
    Int neg_sigma = -cert.sigma_lead;
    std::cout << cert.scenarios.size() << " admissible scenario classes, "
              << "all totals <= " << neg_sigma.get_str() << "\n";
    std::cout << "verdict: " << (cert.valid ? "valid" : "invalid") << "\n";
  });
  return cert.valid ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact knot concordance obstruction toolkit"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit JSON on stdout");
  app.add_option("--seed", opt.seed, "seed for the randomized rank fast path");

  std::string knot_path, family_path, config_path, pres_path;
  std::string constant = "0", check, word, words, images, coeffs = "q";
  long finite_d = 0, count = 1, pmax = 97, pmin = 3, crossings = 0;
  long max_summands = 0, circles = 2, limit = 0;
  int prec = 32, gen = 1, level = 1, tlevel = 1, genus = 1;
  bool integral = false;

  auto *inv = app.add_subcommand("invariants", "classical invariants");
  inv->add_option("knot", knot_path)->required();

  auto *prof = app.add_subcommand("lt-profile", "signature step function");
  prof->add_option("knot", knot_path)->required();
  prof->add_option("--prec", prec);

  auto *rho = app.add_subcommand("rho", "abelian rho invariants");
  rho->add_option("knot", knot_path)->required();
  auto *fin_opt = rho->add_option("--finite", finite_d, "order d");
  rho->add_flag("--integral", integral);
  rho->add_option("--prec", prec);

  auto *bound = app.add_subcommand("bound", "universal rho bound");
  bound->add_option("--crossings", crossings);
  bound->add_option("--knot", knot_path);
  bound->add_option("--check", check, "claimed constant");

  auto *jseq = app.add_subcommand("jseq", "search a verified J-sequence");
  jseq->add_option("--constant", constant)->required();
  jseq->add_option("--count", count);
  jseq->add_option("--primes-max", pmax);
  jseq->add_option("--primes-min", pmin);
  jseq->add_option("--family", family_path);
  jseq->add_option("--max-summands", max_summands);

  auto *fam = app.add_subcommand("family", "build satellite descriptions");
  fam->add_option("--config", config_path)->required();

  auto *fox = app.add_subcommand("fox", "free differential calculus");
  fox->require_subcommand(1);
  auto *foxd = fox->add_subcommand("derive", "fox derivative");
  foxd->add_option("--word", word)->required();
  foxd->add_option("--gen", gen)->required();
  auto *foxw = fox->add_subcommand("wedge", "wedge first-homology rank");
  foxw->add_option("--circles", circles)->required();
  foxw->add_option("--images", images)->required();
  foxw->add_option("--coeffs", coeffs);
  auto *foxt = fox->add_subcommand("tuples", "same as the tuples command");
  foxt->add_option("--level", tlevel)->required();
  foxt->add_option("--genus", genus)->required();
  foxt->add_option("--limit", limit);
  auto *foxi = fox->add_subcommand("indep", "same as the indep command");
  foxi->add_option("--words", words)->required();
  foxi->add_option("--coeffs", coeffs);

  auto *tup = app.add_subcommand("tuples", "inductive tuple collections");
  tup->add_option("--level", tlevel)->required();
  tup->add_option("--genus", genus)->required();
  tup->add_option("--limit", limit);

  auto *ind = app.add_subcommand("indep", "level-1 independence test");
  ind->add_option("--words", words)->required();
  ind->add_option("--coeffs", coeffs);

  auto *mem = app.add_subcommand("membership", "commutator series membership");
  mem->add_option("--presentation", pres_path)->required();
  mem->add_option("--word", word)->required();
  mem->add_option("--level", level)->required();
  mem->add_option("--coeffs", coeffs);

  auto *cert = app.add_subcommand("certify", "signature-defect certificate");
  cert->add_option("--family", config_path)->required();
  cert->add_option("--coeffs", coeffs)->required();
  cert->add_option("--constant", constant);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (inv->parsed()) return run_invariants(opt, knot_path);
    if (prof->parsed()) return run_lt_profile(opt, knot_path, prec);
    if (rho->parsed()) {
      if (!integral && fin_opt->count() == 0)
        throw std::invalid_argument("rho needs --finite d or --integral");
      return run_rho(opt, knot_path, finite_d, integral, prec);
    }
    if (bound->parsed()) return run_bound(opt, crossings, knot_path, check);
    if (jseq->parsed())
      return run_jseq(opt, constant, count, pmax, pmin, family_path,
                      max_summands);
    if (fam->parsed()) return run_family(opt, config_path);
    if (fox->parsed()) {
      if (foxd->parsed()) return run_fox_derive(opt, word, gen);
      if (foxt->parsed()) return run_tuples(opt, tlevel, genus, limit);
      if (foxi->parsed()) return run_indep(opt, words, coeffs);
      return run_fox_wedge(opt, circles, images, coeffs);
    }
    if (tup->parsed()) return run_tuples(opt, tlevel, genus, limit);
    if (ind->parsed()) return run_indep(opt, words, coeffs);
    if (mem->parsed())
      return run_membership(opt, pres_path, word, level, coeffs);
    if (cert->parsed()) return run_certify(opt, config_path, coeffs, constant);
    return 2;
  } catch (const SearchExhaustedSeq &e) {
    Json j = error_json(e.code(), e.what());
    j["partial"] = jsequence_to_json(e.partial());
    j["partial"]["verification"] =
        verify_report_to_json(verify_sequence(e.partial()));
    std::cout << j.dump(2) << "\n";
    return 1;
  } catch (const domain_error &e) {
    std::cout << error_json(e.code(), e.what()).dump(2) << "\n";
    return 1;
  } catch (const std::invalid_argument &e) {
    std::cerr << error_json("InvalidArgument", e.what()).dump(2) << "\n";
    return 2;
  }
}
