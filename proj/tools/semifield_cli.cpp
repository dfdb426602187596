// semifield: command-line front end.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semifield/semifield.hpp"

namespace sf = semifield;
using sf::json;

namespace {

struct TowerArgs {
  std::uint32_t p = 2;
  unsigned e = 1;
  unsigned n = 2;
  std::string modulus;

  void add_to(CLI::App* app, const std::string& degree_flag = "--n") {
    app->add_option("--p", p, "characteristic")->required();
    app->add_option("--e", e, "q = p^e")->capture_default_str();
    app->add_option(degree_flag, n, "[L:F]")->required();
    app->add_option("--modulus", modulus, "defining polynomial of L over F_p, e.g. \"T^2-2\"");
  }

  sf::Tower make() const { return modulus.empty() ? sf::make_tower(p, e, n) : sf::make_tower(p, e, n, modulus); }
};

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_spec_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg);
  if (!in) throw sf::ParseError("--spec is neither a JSON object nor a readable file: " + arg);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// A small generating set: greedily add elements outside the subgroup generated so far.
std::vector<std::size_t> generating_set(const sf::MapGroup& g) {
  std::vector<std::size_t> gens;
  std::vector<bool> in(g.elements.size(), false);
  in[g.identity] = true;
  std::size_t count = 1;
  for (std::size_t cand = 0; cand < g.elements.size() && count < g.elements.size(); ++cand) {
    if (in[cand]) continue;
    gens.push_back(cand);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < in.size(); ++i) {
      if (in[i]) members.push_back(i);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto s : gens) {
        const std::size_t x = g.table[members[i]][s];
        if (!in[x]) {
          in[x] = true;
          members.push_back(x);
        }
      }
    }
    count = members.size();
  }
  return gens;
}

json aut_report(const sf::SemifieldSpec& spec) {
  const sf::FieldTower& t = *spec.tower;
  json out{{"spec", sf::spec_to_json(spec)}};
  std::vector<sf::Automorphism> maps;
  if (spec.kind == sf::Kind::Sandler) {
    const auto params = sf::sandler_params(spec);
    if (!sf::is_semifield(params)) {
      throw sf::DomainError("aut: a lies in a proper subfield of L, so (L/F, sigma, a) is not a semifield");
    }
    maps = sf::sandler_automorphisms(params);
    if (sf::is_prime(t.n())) out["predicted_order"] = sf::predicted_sandler_aut_order(params);
  } else {
    const auto fp = sf::family_params(spec);
    if (!sf::is_division_family(fp)) {
      throw sf::DomainError("aut: w sigma(w) + mu w = eta has a solution in L, so the algebra is not a division algebra");
    }
    if (spec.kind == sf::Kind::Kn1) {
      maps = sf::kn1_candidate_automorphisms(fp);
      out["candidate_count"] = maps.size();
      if (sf::saturating_order(t.p(), spec.dimension()) <= 4096) {
        auto bf = sf::brute_force_automorphisms(spec);
        out["oracle_count"] = bf.maps.size();
        out["oracle_search_space"] = bf.search_space;
        const auto full = sf::make_map_group(spec, bf.maps);
        out["oracle_group"] = sf::group_to_json(sf::identify_group(full));
      }
    } else {
      maps = sf::family_automorphisms(fp);
      if (fp.mu.code != 0) out["stabilizer"] = sf::family_aut_as_stabilizer(fp);
    }
  }
  const sf::MapGroup group = sf::map_group(spec, maps);
  const sf::GroupID id = sf::identify_group(group);
  out["order"] = id.order;
  out["label"] = id.label;
  out["group"] = sf::group_to_json(id);
  json gens = json::array();
  for (auto g : generating_set(group)) gens.push_back(sf::automorphism_to_json(t, maps[g]));
  out["generators"] = gens;
  json all = json::array();
  for (const auto& m : maps) {
    json w = sf::automorphism_to_json(t, m);
    w.erase("matrix");
    all.push_back(w);
  }
  out["witnesses"] = all;
  return out;
}

json classification_json(const sf::ClassificationReport& rep) {
  const sf::FieldTower& t = *rep.tower;
  json classes = json::array();
  for (const auto& c : rep.classes) {
    json members = json::array();
    for (auto m : c.members) members.push_back(t.format(m));
    json row{{"representative", t.format(c.representative)}, {"size", c.size()}, {"members", members}};
    const sf::SandlerParams params{rep.tower, c.representative};
    if (sf::is_semifield(params)) {
      const auto maps = sf::sandler_automorphisms(params);
      row["aut_order"] = maps.size();
      row["group_label"] = sf::identify_group(sf::to_spec(params), maps).label;
    }
    classes.push_back(row);
  }
  json out{{"tower", sf::tower_to_json(t)}, {"class_count", rep.class_count}, {"classes", classes}};
  if (rep.formula_count) out["formula_count"] = *rep.formula_count;
  return out;
}

void print_classification_csv(const json& j) {
  std::cout << "representative,class_size,aut_order,group_label\n";
  for (const auto& c : j["classes"]) {
    std::string label = c.value("group_label", "");
    if (label.find(',') != std::string::npos) label = '"' + label + '"';
    std::cout << c["representative"].get<std::string>() << ',' << c["size"].get<std::size_t>() << ','
              << (c.contains("aut_order") ? std::to_string(c["aut_order"].get<std::size_t>()) : "") << ',' << label
              << '\n';
  }
}

void print_sweep_csv(const sf::SweepResult& sweep, const sf::FieldTower& t) {
  std::cout << "# " << (sweep.sampled ? "sampled sweep, seed " + std::to_string(sweep.seed) : std::string("full sweep"))
            << '\n';
  std::cout << "kind,sigma_power,eta,mu,is_division,nuc_left,nuc_middle,nuc_right,center,aut_order\n";
  for (const auto& r : sweep.rows) {
    std::cout << sf::kind_name(r.kind) << ',' << r.sigma_power << ',' << t.format(r.eta) << ',' << t.format(r.mu) << ','
              << (r.is_division ? "true" : "false") << ',' << r.fingerprint.nuc_left << ','
              << r.fingerprint.nuc_middle << ',' << r.fingerprint.nuc_right << ',' << r.fingerprint.center << ','
              << (r.aut_order ? std::to_string(*r.aut_order) : "") << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite semifields: construction, classification and automorphism groups"};
  app.require_subcommand(1);

  // field
  TowerArgs field_args;
  std::string field_x;
  auto* field = app.add_subcommand("field", "describe a tower F_p < F_q < L");
  field_args.add_to(field);
  field->add_option("--x", field_x, "also report sigma, norm and subfield degree of this element");

  // sandler info
  auto* sandler = app.add_subcommand("sandler", "nonassociative cyclic algebras (L/F, sigma, a)");
  sandler->require_subcommand(1);
  auto* sandler_info = sandler->add_subcommand("info", "fingerprint and left-nucleus prediction");
  TowerArgs sandler_args;
  std::string sandler_a;
  sandler_args.add_to(sandler_info);
  sandler_info->add_option("--a", sandler_a, "parameter a in L \\ F")->required();

  // classify
  auto* classify = app.add_subcommand("classify", "isomorphism classes of Sandler algebras over a tower");
  TowerArgs classify_args;
  std::string classify_format = "json";
  classify_args.add_to(classify, "--r");
  classify->add_option("--format", classify_format)->check(CLI::IsMember({"json", "csv"}));

  // aut
  auto* aut = app.add_subcommand("aut", "automorphism group of one algebra");
  std::string aut_spec;
  aut->add_option("--spec", aut_spec, "JSON object or path to a JSON file")->required();

  // family [sweep]
  auto* family = app.add_subcommand("family", "Knuth and Hughes-Kleinfeld algebras on L + L");
  family->require_subcommand(0, 1);
  TowerArgs family_args;
  std::string family_kind, family_eta, family_mu = "0";
  unsigned family_sigma = 1;
  family->add_option("--kind", family_kind)->check(CLI::IsMember({"kn1", "kn2", "kn3", "hk", "hk_op"}));
  family->add_option("--eta", family_eta);
  family->add_option("--mu", family_mu)->capture_default_str();
  family->add_option("--p", family_args.p)->capture_default_str();
  family->add_option("--e", family_args.e)->capture_default_str();
  family->add_option("--n", family_args.n)->capture_default_str();
  family->add_option("--modulus", family_args.modulus);
  family->add_option("--sigma-power", family_sigma, "sigma = x -> x^(q^k)")->capture_default_str();
  auto* sweep = family->add_subcommand("sweep", "CSV over (eta, mu) for every sigma power");
  TowerArgs sweep_args;
  std::uint64_t sweep_seed = 1;
  std::size_t sweep_samples = 32;
  std::vector<std::string> sweep_kinds{"kn1", "kn2", "kn3", "hk"};
  sweep->add_option("--p", sweep_args.p)->capture_default_str();
  sweep->add_option("--e", sweep_args.e)->capture_default_str();
  sweep->add_option("--n", sweep_args.n)->capture_default_str();
  sweep->add_option("--modulus", sweep_args.modulus);
  sweep->add_option("--kind", sweep_kinds)->check(CLI::IsMember({"kn1", "kn2", "kn3", "hk", "hk_op"}));
  sweep->add_option("--seed", sweep_seed, "seed for sampled sweeps (|L| > 16)")->capture_default_str();
  sweep->add_option("--samples", sweep_samples, "(eta, mu) pairs per sigma power when sampling")->capture_default_str();

  // catalog
  auto* catalog = app.add_subcommand("catalog", "every algebra up to a given order");
  std::uint64_t catalog_max = 0;
  std::string catalog_format = "csv";
  catalog->add_option("--max-order", catalog_max)->required();
  catalog->add_option("--format", catalog_format)->check(CLI::IsMember({"json", "csv"}));

  // verify
  auto* verify = app.add_subcommand("verify", "closed forms against brute-force oracles");
  std::string suite;
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember({"paper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*field) {
      const sf::Tower t = field_args.make();
      json out = sf::tower_to_json(*t);
      out["sigma_of_T"] = t->format(t->sigma(t->gen_t(), 1));
      out["primitive"] = t->format(t->primitive());
      if (!field_x.empty()) {
        const sf::FieldElement x = t->parse(field_x);
        out["x"] = {{"value", t->format(x)},
                    {"coeffs", sf::element_to_json(*t, x)},
                    {"sigma", t->format(t->sigma(x, 1))},
                    {"norm", t->format(sf::norm(*t, x))},
                    {"subfield_degree", sf::subfield_degree(*t, x)}};
      }
      print_json(out);
    } else if (*sandler_info) {
      const sf::SandlerParams params = sf::make_sandler(sandler_args.make(), sandler_a);
      const sf::SemifieldSpec spec = sf::to_spec(params);
      const auto pred = sf::predicted_left_nucleus(params);
      json out = sf::fingerprint_to_json(sf::fingerprint(spec));
      out["s"] = pred.s;
      out["predicted_left_nucleus"] = {{"z_powers", pred.z_powers}, {"dim", pred.dim}};
      out["is_semifield"] = sf::is_semifield(params);
      out["independence_test"] = sf::is_division_by_independence(params);
      print_json(out);
    } else if (*classify) {
      const json report = classification_json(sf::enumerate_classes(classify_args.make()));
      if (classify_format == "csv") {
        print_classification_csv(report);
      } else {
        print_json(report);
      }
    } else if (*aut) {
      json parsed;
      try {
        parsed = json::parse(read_spec_argument(aut_spec));
      } catch (const json::parse_error& e) {
        throw sf::ParseError(std::string("--spec: ") + e.what());
      }
      print_json(aut_report(sf::spec_from_json(parsed)));
    } else if (*sweep) {
      const sf::Tower t = sweep_args.make();
      std::vector<sf::Kind> kinds;
      for (const auto& k : sweep_kinds) kinds.push_back(sf::parse_kind(k));
      print_sweep_csv(sf::family_sweep(t, kinds, sweep_seed, sweep_samples), *t);
    } else if (*family) {
      if (family_kind.empty() || family_eta.empty()) throw sf::DomainError("family: --kind and --eta are required");
      const sf::Tower t = family_args.make();
      const sf::FamilyParams fp =
          sf::make_family(t, sf::parse_kind(family_kind), t->parse(family_eta), t->parse(family_mu), family_sigma);
      const sf::SemifieldSpec spec = sf::to_spec(fp);
      json out = sf::fingerprint_to_json(sf::fingerprint(spec));
      out["root_criterion"] = sf::is_division_family(fp);
      if (!(sf::sigma_squared_is_identity(*t, fp.sigma_power) && fp.mu.code == 0)) {
        const auto check = sf::check_predicted_nuclei(fp);
        out["predicted_nuclei"] = {{"left", check.predicted.left},
                                   {"middle", check.predicted.middle},
                                   {"right", check.predicted.right},
                                   {"matches", check.matches}};
      }
      print_json(out);
    } else if (*catalog) {
      const auto rows = sf::generate_catalog(catalog_max);
      if (catalog_format == "json") {
        print_json(sf::catalog_to_json(rows));
      } else {
        std::cout << sf::catalog_to_csv(rows);
      }
    } else if (*verify) {
      const auto reports = sf::verify_claim_suite();
      std::size_t failed = 0;
      for (const auto& r : reports) {
        std::cout << (r.agree ? "ok      " : "FAILED  ") << r.claim << ": formula=" << r.formula_value
                  << " oracle=" << r.oracle_value << " (" << r.elapsed_us / 1000 << " ms)";
        if (!r.note.empty()) std::cout << " [" << r.note << "]";
        std::cout << '\n';
        if (!r.agree) ++failed;
      }
      std::cout << reports.size() - failed << "/" << reports.size() << " claims agree\n";
      return failed == 0 ? 0 : 1;
    }
  } catch (const sf::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const sf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
