// proxkit: validate instances, compute stable compactifications, run law
// suites and search small frames for counterexamples.
//
// Exit codes: 0 pass, 1 mathematical violation, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "proxkit/catalog.hpp"
#include "proxkit/comonads.hpp"
#include "proxkit/error.hpp"
#include "proxkit/morphisms.hpp"
#include "proxkit/search.hpp"

using namespace proxkit;

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

Json read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

// A file path, or failing that a catalog name.
Json load_reference(const std::string& ref) {
  if (std::filesystem::exists(ref)) return read_document(ref);
  return Json(ref);
}

std::size_t budget() {
  const char* env = std::getenv("PROXKIT_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  try {
    return std::stoull(env);
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidParameter, "PROXKIT_BUDGET must be a non-negative integer");
  }
}

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

void print_axioms(const AxiomReport& r) {
  for (const AxiomCheck& c : r.checks) {
    const char* verdict = c.verdict == Verdict::fail ? "FAIL" : (c.verdict == Verdict::pass ? "pass" : "symbolic");
    std::cout << "  " << c.axiom << ": " << verdict;
    if (!c.witness.empty()) std::cout << "  witness " << join(c.witness);
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
  if (r.collapse) std::cout << "  collapse: " << (*r.collapse ? "yes" : "no") << "\n";
  if (r.proper) std::cout << "  proper: " << (*r.proper ? "yes" : "no") << "\n";
  std::cout << (r.ok() ? "valid" : "invalid") << "\n";
}

// ---- validate ----------------------------------------------------------------

int cmd_validate(const std::string& file, const std::string& out) {
  const Catalog& cat = Catalog::builtin();
  const Json doc = load_reference(file);
  const InstanceResolver resolve = [&cat](const Json& r) { return cat.resolve(r); };
  AxiomReport report;
  std::string what;
  if (doc.is_object() && doc.contains("table")) {
    const FiniteMap f = parse_finite_map(doc, resolve);
    report = doc.value("class", "proxhom") == "pframemap" ? validate_pframemap(f) : validate_proxhom(f);
    what = "map " + f.dom.name + " -> " + f.cod.name;
  } else if (doc.is_object() && doc.contains("blocks")) {
    const ChainMap f = parse_chain_map(doc, resolve);
    report = doc.value("class", "proxhom") == "pframemap" ? validate_pframemap(f) : validate_proxhom(f);
    what = "map " + describe(f.dom()) + " -> " + describe(f.cod());
  } else {
    const Instance inst = cat.resolve(doc);
    report = inst.is_chain() ? validate_proximity(inst.chain()) : validate_proximity(inst.finite());
    what = "instance " + inst.name;
  }
  if (out == "json") {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    std::cout << what << "\n";
    print_axioms(report);
  }
  return report.ok() ? kPass : kViolation;
}

// ---- compactify --------------------------------------------------------------

int cmd_compactify(const std::string& file, const std::string& out) {
  const Catalog& cat = Catalog::builtin();
  const Json doc = load_reference(file);
  const Instance inst = cat.resolve(doc);
  const AxiomReport valid = inst.is_chain() ? validate_proximity(inst.chain()) : validate_proximity(inst.finite());
  if (!valid.ok()) {
    std::cerr << "instance " << inst.name << " is not a proximity frame\n";
    print_axioms(valid);
    return kViolation;
  }
  Json ideals = Json::array();
  if (doc.is_object() && doc.contains("ideals")) {
    if (!inst.is_chain()) throw Error(ErrorKind::ParseError, "ideal terms are read on chain instances");
    const InstanceResolver resolve = [&cat](const Json& r) { return cat.resolve(r); };
    const std::size_t b = budget();
    for (const Json& t : doc.at("ideals")) {
      const ChainIdeal I = normalize(inst.chain(), parse_ideal_term(t, resolve), b);
      ideals.push_back(Json{{"term", t}, {"normal_form", ideal_name(I)},
                            {"position", element_name(encode(inst.chain(), I))}});
    }
  }
  if (out == "dot") {
    std::cout << compactify_dot(inst);
  } else if (out == "text") {
    std::cout << compactify_text(inst);
    for (const Json& i : ideals) std::cout << "  " << i["term"].dump() << " = " << i["normal_form"].get<std::string>() << "\n";
  } else {
    Json j = compactify(inst);
    if (!ideals.empty()) j["ideals"] = ideals;
    std::cout << j.dump(2) << "\n";
  }
  return kPass;
}

// ---- laws --------------------------------------------------------------------

struct LawsOptions {
  std::string suite = "all";
  std::string instance = "finite-catalog";
  std::size_t samples = 16;
  std::uint64_t seed = 42;
  std::string out = "text";
};

bool wants(const LawsOptions& o, const char* suite) { return o.suite == "all" || o.suite == suite; }

void append(std::vector<LawReport>& to, std::vector<LawReport> from) {
  to.insert(to.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

std::vector<LawReport> object_laws(const Instance& inst, const LawsOptions& o, const LawConfig& cfg) {
  std::vector<LawReport> out;
  const auto run = [&](const auto& p) {
    if (wants(o, "R")) append(out, r_comonad_laws(p, cfg));
    if (wants(o, "C")) append(out, c_comonad_laws(p, cfg));
    if (wants(o, "coalgebra")) {
      auto laws = coalgebra_laws(p, cfg);
      if (laws.empty()) {
        // Not stably compact: record the rejection so the stream says why nothing ran.
        LawReport r{"coalg.stably-compact", inst.name, true, 1, cfg.seed, {}, "not stably compact; no coalgebra"};
        laws.push_back(r);
      }
      append(out, std::move(laws));
    }
  };
  if (inst.is_chain()) {
    run(inst.chain());
  } else {
    run(inst.finite());
  }
  for (LawReport& r : out) r.instance = inst.name;
  return out;
}

std::vector<LawReport> map_laws(const Instance& inst, const Catalog& cat, const LawsOptions& o,
                                const LawConfig& cfg) {
  std::vector<LawReport> out;
  if (inst.is_chain()) {
    std::vector<ChainMap> maps = cat.chain_maps_touching(inst.chain());
    if (maps.empty()) maps.push_back(identity_map(inst.chain()));
    if (wants(o, "morphisms")) append(out, morphism_laws(maps, inst.name, cfg));
    if (wants(o, "naturality")) append(out, naturality_laws(maps, inst.name, cfg));
  } else {
    const auto maps = enumerate_maps(inst.finite(), inst.finite(), MapClass::proxhom);
    if (wants(o, "morphisms")) append(out, morphism_laws(maps, inst.name, cfg));
    if (wants(o, "naturality")) append(out, naturality_laws(maps, inst.name, cfg));
  }
  return out;
}

int cmd_laws(const LawsOptions& o) {
  const Catalog& cat = Catalog::builtin();
  const LawConfig cfg{o.samples, o.seed};
  std::vector<LawReport> reports;
  if (o.instance == "finite-catalog" || o.instance == "catalog") {
    std::vector<Instance> objects = o.instance == "catalog" ? cat.instances() : cat.finite_instances();
    for (const Instance& i : objects) append(reports, object_laws(i, o, cfg));
    const auto finite_maps = finite_proxhoms(cat, 4);
    if (wants(o, "morphisms")) append(reports, morphism_laws(finite_maps, "finite-catalog", cfg));
    if (wants(o, "naturality")) append(reports, naturality_laws(finite_maps, "finite-catalog", cfg));
    if (o.instance == "catalog") {
      for (const Instance& i : cat.chain_instances()) append(reports, map_laws(i, cat, o, cfg));
    }
  } else {
    const Instance inst = cat.resolve(load_reference(o.instance));
    append(reports, object_laws(inst, o, cfg));
    append(reports, map_laws(inst, cat, o, cfg));
  }
  bool pass = true;
  for (const LawReport& r : reports) pass = pass && r.pass;
  if (o.out == "json") {
    Json arr = Json::array();
    for (const LawReport& r : reports) arr.push_back(to_json(r));
    std::cout << Json{{"verdict", pass ? "pass" : "fail"}, {"reports", arr}}.dump(2) << "\n";
  } else {
    for (const LawReport& r : reports) {
      std::cout << (r.pass ? "pass " : "FAIL ") << r.law << "  [" << r.instance << "]  samples " << r.samples;
      if (!r.witness.empty()) std::cout << "  witness " << join(r.witness);
      if (!r.detail.empty()) std::cout << "  (" << r.detail << ")";
      std::cout << "\n";
    }
    std::cout << reports.size() << " laws, " << (pass ? "all pass" : "violations found") << "\n";
  }
  return pass ? kPass : kViolation;
}

// ---- search ------------------------------------------------------------------

int cmd_search(const std::string& law, std::size_t max_size, const std::string& out) {
  const SearchResult r = run_search(law, max_size);
  if (out == "json") {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << "search " << r.law << " up to " << r.max_size << " elements: " << r.frames << " frames, "
              << r.checked << " candidates checked\n";
    for (const std::string& line : r.certificate) std::cout << "  " << line << "\n";
    for (const SearchFinding& f : r.counterexamples) {
      std::cout << "  counterexample on " << f.frame << ": " << f.detail;
      if (!f.witness.empty()) std::cout << "  witness " << join(f.witness);
      std::cout << "\n";
    }
    if (r.ok()) std::cout << "no counterexample\n";
    std::cout << r.note << "\n";
  }
  return r.ok() ? kPass : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proxkit: proximity frames, stable compactification and the round-ideal comonads"};
  app.require_subcommand(1);

  std::string file;
  std::string out = "text";

  auto* validate = app.add_subcommand("validate", "check the proximity or morphism axioms of a document");
  validate->add_option("file", file, "instance or map document (or a catalog name)")->required();
  validate->add_option("--out", out, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string cout_fmt = "json";
  auto* compact = app.add_subcommand("compactify", "frame of round ideals of an instance");
  compact->add_option("file", file, "instance document (or a catalog name)")->required();
  compact->add_option("--out", cout_fmt, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));

  LawsOptions laws_opts;
  auto* laws = app.add_subcommand("laws", "run law suites");
  laws->add_option("--suite", laws_opts.suite, "R, C, morphisms, naturality, coalgebra or all")
      ->check(CLI::IsMember({"R", "C", "morphisms", "naturality", "coalgebra", "all"}));
  laws->add_option("--instance", laws_opts.instance, "catalog name, file, finite-catalog or catalog");
  laws->add_option("--samples", laws_opts.samples, "extra seeded points per chain object");
  laws->add_option("--seed", laws_opts.seed, "sampling seed");
  laws->add_option("--out", laws_opts.out, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string law;
  std::size_t max_size = 5;
  auto* search = app.add_subcommand("search", "exhaustive search over generated finite frames");
  search->add_option("--law", law, "collapse, theta-rho or star-vs-compose")
      ->required()
      ->check(CLI::IsMember({"collapse", "theta-rho", "star-vs-compose"}));
  search->add_option("--max-size", max_size, "largest frame size")->required();
  search->add_option("--out", out, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*compact) return cmd_compactify(file, cout_fmt);
    if (*laws) return cmd_laws(laws_opts);
    if (*search) return cmd_search(law, max_size, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) std::cerr << " [" << join(e.witness()) << "]";
    std::cerr << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
