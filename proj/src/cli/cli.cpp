#include "cli.hpp"

#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "engine/catalog.hpp"
#include "engine/conjectures.hpp"
#include "engine/equivariant.hpp"
#include "engine/group.hpp"
#include "engine/numeric.hpp"
#include "engine/orbitcat.hpp"
#include "engine/pisubgroups.hpp"
#include "engine/subgroup.hpp"

namespace engine_cli {

namespace {

using OJson = nlohmann::ordered_json;

struct Opts {
  std::string group;
  std::string gens;
  std::string action;
  std::string data_dir;
  std::string pi;
  std::string output = "tsv";
  int degree = 0;
  long long prime = 0;
  int r = 2;
  long long nmax = 10;
  long long max_m = 8;
  bool force_full = false;
  bool slow_ok = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string group_label(const Opts& o) {
  if (!o.group.empty()) return o.group;
  std::ostringstream ss;
  ss << "custom(degree=" << o.degree << ")";
  return ss.str();
}

engine::PermutationGroup resolve_group(const Opts& o) {
  if (!o.group.empty()) {
    engine::check(o.gens.empty(), "give --group or --gens, not both");
    return engine::group_by_name(o.group);
  }
  engine::check(!o.gens.empty() && o.degree > 0,
                "provide --group NAME or --gens LIST with --degree N");
  std::vector<engine::Permutation> perms;
  for (const std::string& part : split(o.gens, ';'))
    perms.push_back(engine::Permutation::parse_cycles(part, o.degree));
  return engine::PermutationGroup::from_generators(o.degree,
                                                   std::move(perms));
}

void gate_slow(const Opts& o, const engine::PermutationGroup& g) {
  engine::check(o.slow_ok || g.order() <= 10000,
                "group order exceeds 10000: pass --slow-ok");
}

long long require_prime(const Opts& o, const engine::PermutationGroup& g) {
  engine::check(o.prime > 0, "--prime is required");
  engine::check(engine::is_prime(o.prime), "--prime must be prime");
  engine::check(g.order() % o.prime == 0, "prime does not divide |G|");
  return o.prime;
}

// Parent group generated by the base group and the action generators,
// owning storage for the resulting pair.
struct PairHolder {
  std::unique_ptr<engine::PermutationGroup> parent;
  engine::GroupPair pair;
};

PairHolder resolve_pair(const Opts& o) {
  engine::PermutationGroup base = resolve_group(o);
  std::vector<engine::Permutation> gperms;
  for (int i : base.generator_indices()) gperms.push_back(base.perm(i));
  if (gperms.empty())
    gperms.push_back(engine::Permutation::identity(base.degree()));
  std::vector<engine::Permutation> aperms;
  if (!o.action.empty())
    for (const std::string& part : split(o.action, ';'))
      aperms.push_back(
          engine::Permutation::parse_cycles(part, base.degree()));

  std::vector<engine::Permutation> all = gperms;
  all.insert(all.end(), aperms.begin(), aperms.end());
  PairHolder h;
  h.parent = std::make_unique<engine::PermutationGroup>(
      engine::PermutationGroup::from_generators(base.degree(),
                                                std::move(all)));
  std::vector<int> gi, ai;
  for (const engine::Permutation& x : gperms)
    gi.push_back(h.parent->index_of(x));
  for (const engine::Permutation& x : aperms)
    ai.push_back(h.parent->index_of(x));
  h.pair = engine::make_group_pair(*h.parent, gi, ai);
  return h;
}

engine::CharacterDegreeData degree_data_for(const engine::PermutationGroup& g,
                                            const std::string& name_hint) {
  std::string name = name_hint;
  if (name.empty()) {
    std::optional<std::string> id = engine::identify_catalog_group(g);
    engine::check(id.has_value(),
                  "group not identified: no character degree data");
    name = *id;
  }
  std::optional<std::vector<long long>> deg = engine::character_degrees(name);
  engine::check(deg.has_value(), "no character degree data for " + name);
  return {name, *deg};
}

std::string istr(const engine::BigInt& z) { return z.get_str(); }
std::string rstr(const engine::BigRat& q) { return engine::rat_str(q); }

void emit(const Opts& o, const OJson& j) {
  if (o.output == "json") {
    std::cout << j.dump(1) << "\n";
    return;
  }
  // TSV: scalars as "key<TAB>value" lines; arrays of objects as a header
  // row followed by value rows; the optional "footer" string prints last.
  std::string footer;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "footer") {
      footer = it.value().get<std::string>();
      continue;
    }
    if (it.value().is_array()) {
      const OJson& rows = it.value();
      if (rows.empty()) continue;
      bool first = true;
      for (const OJson& row : rows) {
        if (first) {
          bool lead = true;
          for (auto c = row.begin(); c != row.end(); ++c) {
            std::cout << (lead ? "" : "\t") << c.key();
            lead = false;
          }
          std::cout << "\n";
          first = false;
        }
        bool lead = true;
        for (auto c = row.begin(); c != row.end(); ++c) {
          std::cout << (lead ? "" : "\t");
          if (c.value().is_string())
            std::cout << c.value().get<std::string>();
          else
            std::cout << c.value();
          lead = false;
        }
        std::cout << "\n";
      }
    } else {
      std::cout << it.key() << "\t";
      if (it.value().is_string())
        std::cout << it.value().get<std::string>();
      else
        std::cout << it.value();
      std::cout << "\n";
    }
  }
  if (!footer.empty()) std::cout << footer << "\n";
}

int cmd_brown(const Opts& o) {
  engine::PermutationGroup g = resolve_group(o);
  gate_slow(o, g);
  long long p = require_prime(o, g);
  engine::BrownPoset s(g, p, o.force_full);
  engine::WebbReport w = engine::webb_identity(s);
  const engine::ConjugacyClasses& cls = g.conjugacy_classes();

  OJson j;
  j["command"] = "brown";
  j["group"] = group_label(o);
  j["order"] = g.order();
  j["prime"] = p;
  j["reduced_euler"] = istr(s.reduced_euler());
  j["classes"] = OJson::array();
  engine::BigInt reduced_sum = 0, unreduced_sum = 0;
  for (std::size_t c = 0; c < cls.reps.size(); ++c) {
    OJson row;
    row["class_order"] = cls.rep_orders[c];
    row["class_size"] = cls.sizes[c];
    row["fixed_reduced_euler"] = istr(w.fixed_reduced_euler[c]);
    j["classes"].push_back(row);
    reduced_sum += engine::big(cls.sizes[c]) * w.fixed_reduced_euler[c];
    unreduced_sum +=
        engine::big(cls.sizes[c]) * (w.fixed_reduced_euler[c] + 1);
  }
  j["weighted_reduced_sum"] = istr(reduced_sum);
  j["weighted_unreduced_sum"] = istr(unreduced_sum);
  emit(o, j);
  return 0;
}

int cmd_weighting(const Opts& o) {
  engine::PermutationGroup g = resolve_group(o);
  gate_slow(o, g);
  long long p = require_prime(o, g);
  engine::BrownPoset s(g, p, o.force_full);
  engine::WeightingTable t = engine::brown_weighting(s);

  OJson j;
  j["command"] = "weighting";
  j["group"] = group_label(o);
  j["prime"] = p;
  j["rows"] = OJson::array();
  for (std::size_t i = 0; i < t.orders.size(); ++i) {
    OJson row;
    row["order"] = t.orders[i];
    row["length"] = t.lengths[i];
    row["weight"] = istr(t.weights[i]);
    row["quotient_order"] = t.quotient_orders[i];
    row["quotient_weight"] = istr(t.quotient_weights[i]);
    j["rows"].push_back(row);
  }
  j["reduced_euler"] = istr(t.poset_reduced_euler);
  j["p_singular"] = t.p_singular_count;
  emit(o, j);
  return 0;
}

int cmd_chi_r(const Opts& o) {
  engine::PermutationGroup g = resolve_group(o);
  gate_slow(o, g);
  long long p = require_prime(o, g);
  engine::check(o.r >= 0, "-r must be nonnegative");
  engine::BrownPoset s(g, p, o.force_full);
  engine::EquivariantEvaluator ev(s, engine::full_subgroup(g));

  OJson j;
  j["command"] = "chi-r";
  j["group"] = group_label(o);
  j["prime"] = p;
  j["rows"] = OJson::array();
  for (int k = 0; k <= o.r; ++k) {
    OJson row;
    row["r"] = k;
    row["chi_tilde_r"] = rstr(ev.chi_tilde_r(k));
    j["rows"].push_back(row);
  }
  emit(o, j);
  return 0;
}

int cmd_class_function(const Opts& o) {
  engine::PermutationGroup g = resolve_group(o);
  gate_slow(o, g);
  long long p = require_prime(o, g);
  engine::check(o.r >= 1, "-r must be at least 1");
  engine::BrownPoset s(g, p, o.force_full);
  engine::EquivariantEvaluator ev(s, engine::full_subgroup(g));
  std::vector<engine::BigRat> alpha = ev.alpha_tilde_r_by_class(o.r);
  const engine::ConjugacyClasses& cls = g.conjugacy_classes();

  OJson j;
  j["command"] = "class-function";
  j["group"] = group_label(o);
  j["prime"] = p;
  j["r"] = o.r;
  j["rows"] = OJson::array();
  engine::BigRat sum;
  for (std::size_t c = 0; c < cls.reps.size(); ++c) {
    OJson row;
    row["class_order"] = cls.rep_orders[c];
    row["class_size"] = cls.sizes[c];
    row["alpha_tilde_r"] = rstr(alpha[c]);
    j["rows"].push_back(row);
    sum += alpha[c];
  }
  j["sum"] = rstr(sum);
  emit(o, j);
  return 0;
}

int cmd_artin(const Opts& o) {
  engine::PermutationGroup g = resolve_group(o);
  gate_slow(o, g);
  long long p = require_prime(o, g);
  engine::check(o.r >= 2, "-r must be at least 2 for integral coefficients");
  engine::BrownPoset s(g, p, o.force_full);
  engine::ArtinSystem art = engine::build_artin_system(g);
  engine::ArtinDecomposition dec = engine::artin_decompose(s, art, o.r);

  OJson j;
  j["command"] = "artin";
  j["group"] = group_label(o);
  j["prime"] = p;
  j["r"] = o.r;
  j["rows"] = OJson::array();
  for (std::size_t c = 0; c < art.classes.size(); ++c) {
    OJson row;
    row["cyclic_order"] = art.classes[c].cyc_order;
    row["normalizer_order"] = art.classes[c].normalizer_order;
    row["weight"] = istr(art.classes[c].weight);
    row["coefficient"] = istr(dec.coefficients[c]);
    j["rows"].push_back(row);
  }
  j["chi_tilde_r"] = istr(dec.chi_r);
  emit(o, j);
  return 0;
}

int cmd_orbitcat(const Opts& o) {
  if (!o.action.empty()) {
    PairHolder h = resolve_pair(o);
    gate_slow(o, *h.parent);
    engine::check(o.prime > 0 && engine::is_prime(o.prime),
                  "--prime is required");
    long long p = o.prime;
    engine::CentralizedOrbitEuler cen = engine::centralized_orbit_category_euler(
        h.pair, p, engine::OrbitVariant::centralized);
    engine::CentralizedOrbitEuler tra = engine::centralized_orbit_category_euler(
        h.pair, p, engine::OrbitVariant::transporter);

    OJson j;
    j["command"] = "orbitcat";
    j["group"] = group_label(o);
    j["prime"] = p;
    j["centralized_chi"] = cen.defined ? rstr(cen.chi) : "undefined";
    j["transporter_chi"] = rstr(tra.chi);
    j["classes"] = OJson::array();
    for (const engine::OrbitObjectClass& c : cen.classes) {
      OJson row;
      row["object_order"] = static_cast<long long>(c.rep.size());
      row["class_size"] = c.size;
      row["self_hom"] = istr(c.self_hom);
      j["classes"].push_back(row);
    }
    emit(o, j);
    return 0;
  }

  engine::PermutationGroup g = resolve_group(o);
  gate_slow(o, g);
  long long p = require_prime(o, g);
  engine::OrbitCategoryEuler e = engine::orbit_category_euler(g, p);
  engine::BridgeReport b = engine::frobenius_brown_bridge(g, p);

  OJson j;
  j["command"] = "orbitcat";
  j["group"] = group_label(o);
  j["prime"] = p;
  j["chi_closed_form"] = rstr(e.closed_form);
  j["chi_weighting"] = rstr(e.weighting);
  j["chi_coweighting"] = rstr(e.coweighting);
  j["chi_zeta_solve"] = rstr(e.zeta_solve);
  j["bridge"] = OJson::array();
  for (const engine::BridgeTerm& t : b.terms) {
    OJson row;
    row["rep_order"] = t.rep_order;
    row["quotient_order"] = t.quotient_order;
    row["quotient_euler"] = istr(t.quotient_euler);
    row["value"] = istr(t.value);
    j["bridge"].push_back(row);
  }
  j["p_singular"] = b.p_singular_count;
  j["poset_reduced_euler"] = istr(b.poset_reduced_euler);
  emit(o, j);
  return 0;
}

int cmd_theorem1(const Opts& o) {
  PairHolder h = resolve_pair(o);
  gate_slow(o, *h.parent);
  engine::check(o.prime > 0 && engine::is_prime(o.prime),
                "--prime is required");
  engine::CentralizedReport rep = engine::theorem1_verify(h.pair, o.prime);

  OJson j;
  j["command"] = "theorem1";
  j["group"] = group_label(o);
  j["prime"] = o.prime;
  j["rows"] = OJson::array();
  for (const engine::CentralizedRow& r : rep.rows) {
    OJson row;
    row["rep_order"] = r.rep_order;
    row["orbit_size"] = r.orbit_size;
    row["weight"] = istr(r.weight);
    row["centralized_order"] = r.centralized_order;
    j["rows"].push_back(row);
  }
  j["centralized_p_singular"] = rep.centralized_p_singular;
  j["fixed_reduced_euler"] = istr(rep.fixed_reduced_euler);
  j["centralizer_p_part"] = rep.centralizer_p_part;
  emit(o, j);
  return 0;
}

int cmd_krc(const Opts& o) {
  engine::PermutationGroup g = resolve_group(o);
  gate_slow(o, g);
  long long p = require_prime(o, g);
  engine::CharacterDegreeData data = degree_data_for(g, o.group);
  engine::KrcReport r = engine::krc_check(g, p, data);
  engine::AwcReport a = engine::awc_assemble(g, p);

  OJson j;
  j["command"] = "krc";
  j["group"] = group_label(o);
  j["prime"] = p;
  j["alpha_sum"] = istr(r.class_sum);
  j["artin_sum"] = istr(r.artin_sum);
  j["abelian_sum"] = istr(r.abelian_sum);
  j["z_p"] = r.z_value;
  j["common_value"] = istr(r.class_sum);
  j["verdict"] = r.holds ? "PASS" : "FAIL";
  j["awc_p_regular_classes"] = a.p_regular_classes;
  if (a.complete) {
    j["awc_total"] = *a.total;
    j["awc_verdict"] = *a.holds ? "PASS" : "FAIL";
  } else {
    j["awc_total"] = "insufficient data";
    j["awc_verdict"] = "UNDECIDED";
  }
  emit(o, j);
  if (!r.holds) return 2;
  if (a.complete && !*a.holds) return 2;
  return 0;
}

int cmd_pi(const Opts& o) {
  engine::PermutationGroup g = resolve_group(o);
  gate_slow(o, g);
  engine::check(!o.pi.empty(), "--pi is required (e.g. --pi 2,3)");
  std::vector<long long> primes;
  for (const std::string& part : split(o.pi, ','))
    primes.push_back(std::atoll(part.c_str()));
  engine::PiGlobalReport rep = engine::pi_global_identity(g, primes);
  engine::HioReport hio = engine::hio_divisibility(g, primes);
  const engine::PiWeightingTable& t = rep.table;

  OJson j;
  j["command"] = "pi";
  j["group"] = group_label(o);
  j["pi"] = o.pi;
  j["rows"] = OJson::array();
  for (std::size_t i = 0; i < t.orders.size(); ++i) {
    OJson row;
    row["order"] = t.orders[i];
    row["length"] = t.lengths[i];
    row["normalizer_index"] = hio.rows[i].norm_index;
    row["normalizer_index_pi"] = hio.rows[i].norm_index_pi;
    row["weight"] = istr(t.weights[i]);
    row["quotient"] = istr(hio.rows[i].quotient);
    j["rows"].push_back(row);
  }
  j["chi_orbit"] = rstr(rep.orbit_euler);
  std::ostringstream foot;
  foot << "|G_pi| = " << t.pi_singular_count;
  j["footer"] = foot.str();
  emit(o, j);
  return 0;
}

int cmd_series(const Opts& o) {
  engine::check(o.prime > 0 && engine::is_prime(o.prime),
                "--prime is required");
  engine::check(o.nmax >= 1 && o.nmax <= 400, "--nmax must be in 1..400");
  std::vector<engine::BigInt> a = engine::artin_hasse_counts(o.prime, o.nmax);
  if (o.output == "json") {
    OJson j;
    j["command"] = "series";
    j["prime"] = o.prime;
    j["counts"] = OJson::array();
    for (const engine::BigInt& x : a) j["counts"].push_back(istr(x));
    std::cout << j.dump(1) << "\n";
    return 0;
  }
  for (const engine::BigInt& x : a) std::cout << istr(x) << "\n";
  return 0;
}

int cmd_identities(const Opts& o) {
  engine::check(o.max_m >= 1 && o.max_m <= 12, "--max-m must be in 1..12");
  OJson j;
  j["command"] = "identities";
  j["rows"] = OJson::array();
  for (long long m = 1; m <= o.max_m; ++m) {
    engine::GaussianReport r = engine::gaussian_identities(m);
    OJson row;
    row["m"] = r.m;
    row["exponent"] = r.exponent;
    row["compositions"] = r.compositions;
    row["verified"] = r.first_identity && r.second_identity ? "ok" : "fail";
    j["rows"].push_back(row);
  }
  emit(o, j);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Euler characteristics of subgroup posets and orbit "
               "categories of finite groups"};
  app.require_subcommand(1);
  Opts o;

  auto add_group_opts = [&o](CLI::App* cmd) {
    cmd->add_option("--group", o.group, "catalog group name");
    cmd->add_option("--gens", o.gens,
                    "semicolon-separated generators in cycle notation");
    cmd->add_option("--degree", o.degree, "degree for --gens");
    cmd->add_option("--data-dir", o.data_dir, "character degree data dir");
    cmd->add_option("--output", o.output, "tsv or json");
    cmd->add_flag("--slow-ok", o.slow_ok, "allow large groups");
  };
  auto add_prime = [&o](CLI::App* cmd) {
    cmd->add_option("--prime", o.prime, "prime p");
  };
  auto add_poset = [&o](CLI::App* cmd) {
    cmd->add_flag("--force-full-poset", o.force_full,
                  "evaluate on the full poset, not the radical part");
  };
  auto add_r = [&o](CLI::App* cmd) {
    cmd->add_option("-r,--r", o.r, "tuple rank r");
  };
  auto add_action = [&o](CLI::App* cmd) {
    cmd->add_option("--action", o.action,
                    "generators of the acting group A in cycle notation");
  };

  CLI::App* c;
  c = app.add_subcommand("brown", "poset chi~ and the class-sum identity");
  add_group_opts(c), add_prime(c), add_poset(c);
  c = app.add_subcommand("weighting", "radical weighting table");
  add_group_opts(c), add_prime(c), add_poset(c);
  c = app.add_subcommand("chi-r", "equivariant Euler characteristics");
  add_group_opts(c), add_prime(c), add_poset(c), add_r(c);
  c = app.add_subcommand("class-function", "Euler class function alpha~_r");
  add_group_opts(c), add_prime(c), add_poset(c), add_r(c);
  c = app.add_subcommand("artin", "Artin decomposition of alpha~_r");
  add_group_opts(c), add_prime(c), add_poset(c), add_r(c);
  c = app.add_subcommand("orbitcat", "orbit category Euler characteristics");
  add_group_opts(c), add_prime(c), add_action(c);
  c = app.add_subcommand("theorem1", "centralized fixed-point identities");
  add_group_opts(c), add_prime(c), add_action(c);
  c = app.add_subcommand("krc", "Knorr-Robinson and weight-count checks");
  add_group_opts(c), add_prime(c);
  c = app.add_subcommand("pi", "pi-subgroup weighting and identities");
  add_group_opts(c);
  c->add_option("--pi", o.pi, "comma-separated primes");
  c = app.add_subcommand("series", "p-singular counts of symmetric groups");
  add_group_opts(c), add_prime(c);
  c->add_option("--nmax", o.nmax, "series length");
  c = app.add_subcommand("identities", "Gaussian multinomial identities");
  add_group_opts(c);
  c->add_option("--max-m", o.max_m, "largest m to verify");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (!o.data_dir.empty()) engine::set_data_dir(o.data_dir);
    engine::check(o.output == "tsv" || o.output == "json",
                  "--output must be tsv or json");
    if (app.got_subcommand("brown")) return cmd_brown(o);
    if (app.got_subcommand("weighting")) return cmd_weighting(o);
    if (app.got_subcommand("chi-r")) return cmd_chi_r(o);
    if (app.got_subcommand("class-function")) return cmd_class_function(o);
    if (app.got_subcommand("artin")) return cmd_artin(o);
    if (app.got_subcommand("orbitcat")) return cmd_orbitcat(o);
    if (app.got_subcommand("theorem1")) return cmd_theorem1(o);
    if (app.got_subcommand("krc")) return cmd_krc(o);
    if (app.got_subcommand("pi")) return cmd_pi(o);
    if (app.got_subcommand("series")) return cmd_series(o);
    if (app.got_subcommand("identities")) return cmd_identities(o);
    std::cerr << "error: no command\n";
    return 1;
  } catch (const engine::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const engine::EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace engine_cli
