#include "proxkit/catalog.hpp"

#include <cstdlib>
#include <fstream>

#include "proxkit/comonads.hpp"
#include "proxkit/error.hpp"
#include "proxkit/morphisms.hpp"

namespace proxkit {

namespace {

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
}

Instance wrap(const std::string& op, const Instance& inner) {
  const std::string name = op + "(" + inner.name + ")";
  if (inner.is_chain()) {
    return Instance{name, op == "R" ? ChainModel::R(inner.chain()) : ChainModel::C(inner.chain())};
  }
  FiniteProxFrame f = op == "R" ? FiniteModel::R(inner.finite()) : FiniteModel::C(inner.finite());
  f.name = name;
  return Instance{name, std::move(f)};
}

}  // namespace

std::filesystem::path Catalog::default_dir() {
  if (const char* env = std::getenv("PROXKIT_CATALOG"); env != nullptr && *env != '\0') return env;
  return PROXKIT_CATALOG_DIR;
}

Catalog Catalog::load(const std::filesystem::path& dir) {
  Catalog c;
  const Json inst = read_json(dir / "instances.json");
  for (const Json& doc : inst.at("instances")) c.instances_.push_back(parse_instance(doc));
  const Json maps = read_json(dir / "morphisms.json");
  const InstanceResolver resolve = [&c](const Json& ref) { return c.resolve(ref); };
  for (const Json& doc : maps.at("morphisms")) {
    c.chain_maps_.push_back({doc.at("name").get<std::string>(), parse_chain_map(doc, resolve)});
  }
  return c;
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = load(default_dir());
  return catalog;
}

Instance Catalog::instance(const std::string& name) const {
  for (const char* op : {"R", "C"}) {
    const std::string prefix = std::string(op) + "(";
    if (name.size() > prefix.size() + 1 && name.rfind(prefix, 0) == 0 && name.back() == ')') {
      return wrap(op, instance(name.substr(prefix.size(), name.size() - prefix.size() - 1)));
    }
  }
  for (const Instance& i : instances_) {
    if (i.name == name) return i;
  }
  throw Error(ErrorKind::UnknownInstance, "no catalog instance '" + name + "'", {name});
}

Instance Catalog::resolve(const Json& ref) const {
  if (ref.is_string()) return instance(ref.get<std::string>());
  return parse_instance(ref);
}

const ChainMap& Catalog::chain_map(const std::string& name) const {
  for (const NamedChainMap& m : chain_maps_) {
    if (m.name == name) return m.map;
  }
  throw Error(ErrorKind::UnknownInstance, "no catalog morphism '" + name + "'", {name});
}

std::vector<Instance> Catalog::finite_instances(std::size_t max_size) const {
  std::vector<Instance> out;
  for (const Instance& i : instances_) {
    if (!i.is_chain() && i.finite().size() <= max_size) out.push_back(i);
  }
  return out;
}

std::vector<Instance> Catalog::chain_instances() const {
  std::vector<Instance> out;
  for (const Instance& i : instances_) {
    if (i.is_chain()) out.push_back(i);
  }
  return out;
}

std::vector<ChainMap> Catalog::chain_maps_touching(const ProxChain& p) const {
  std::vector<ChainMap> out;
  for (const NamedChainMap& m : chain_maps_) {
    if (m.map.dom() == p || m.map.cod() == p) out.push_back(m.map);
  }
  return out;
}

std::vector<FiniteMap> finite_proxhoms(const Catalog& catalog, std::size_t max_size) {
  std::vector<FiniteMap> out;
  const auto frames = catalog.finite_instances(max_size);
  for (const Instance& a : frames) {
    for (const Instance& b : frames) {
      auto maps = enumerate_maps(a.finite(), b.finite(), MapClass::proxhom);
      out.insert(out.end(), std::make_move_iterator(maps.begin()), std::make_move_iterator(maps.end()));
    }
  }
  return out;
}

}  // namespace proxkit
