#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "proxkit/io.hpp"

namespace proxkit {

struct NamedChainMap {
  std::string name;
  ChainMap map;
};

/// Built-in instances and chain morphisms, read from the data files in the
/// catalog directory (PROXKIT_CATALOG overrides the compiled-in path).
class Catalog {
 public:
  static Catalog load(const std::filesystem::path& dir);
  /// Loaded once per process.
  static const Catalog& builtin();
  static std::filesystem::path default_dir();

  const std::vector<Instance>& instances() const noexcept { return instances_; }
  const std::vector<NamedChainMap>& chain_maps() const noexcept { return chain_maps_; }

  /// Throws UnknownInstance. Also accepts "R(name)" and "C(name)" for the
  /// frame of round ideals with ≪ or ⊑, nested to any depth.
  Instance instance(const std::string& name) const;
  /// A name string or an inline instance document.
  Instance resolve(const Json& ref) const;
  const ChainMap& chain_map(const std::string& name) const;

  /// Finite instances with at most max_size elements, in catalog order.
  std::vector<Instance> finite_instances(std::size_t max_size = 64) const;
  std::vector<Instance> chain_instances() const;
  /// Catalog chain maps whose domain or codomain is p.
  std::vector<ChainMap> chain_maps_touching(const ProxChain& p) const;

 private:
  std::vector<Instance> instances_;
  std::vector<NamedChainMap> chain_maps_;
};

/// Every proximity homomorphism between finite catalog frames with at most
/// max_size elements.
std::vector<FiniteMap> finite_proxhoms(const Catalog& catalog, std::size_t max_size);

}  // namespace proxkit
