#pragma once

#include <functional>
#include <string>
#include <variant>

#include <json.hpp>

#include "proxkit/chain.hpp"
#include "proxkit/finite_map.hpp"
#include "proxkit/proximity.hpp"
#include "proxkit/report.hpp"
#include "proxkit/roundideal.hpp"

namespace proxkit {

using Json = nlohmann::ordered_json;

/// A proximity frame read from an instance document. Finite builders
/// (finite, downsets, topology, product) all resolve to a FiniteProxFrame;
/// the relation is not validated here.
struct Instance {
  std::string name;
  std::variant<FiniteProxFrame, ProxChain> value;

  bool is_chain() const noexcept { return std::holds_alternative<ProxChain>(value); }
  const FiniteProxFrame& finite() const { return std::get<FiniteProxFrame>(value); }
  const ProxChain& chain() const { return std::get<ProxChain>(value); }
};

/// Throws ParseError on malformed documents and the frame builders' errors
/// on malformed frames.
Instance parse_instance(const Json& doc);
/// Canonical document: finite instances print as explicit elements, covering
/// pairs and relation; chains as k, m and the reflexive limits. Printing a
/// parsed print gives the same document.
Json print_instance(const Instance& inst);

/// Looks up instance references inside map documents: a catalog name or an
/// inline instance document.
using InstanceResolver = std::function<Instance(const Json&)>;

/// {"dom", "cod", "table": {"a": "b", ...}} for finite frames.
FiniteMap parse_finite_map(const Json& doc, const InstanceResolver& resolve);
/// {"dom", "cod", "blocks": [{"head": [...], "tail": {"block", "a", "b"}} | {"const": e}],
///  "exceptions": {"e": "e'"}, "limits": "derived"}. With "limits": "derived"
/// every non-reflexive limit is sent to the supremum of the values below it.
ChainMap parse_chain_map(const Json& doc, const InstanceResolver& resolve);
Json print_map(const FiniteMap& f);
Json print_map(const ChainMap& f);

/// "Prin(Succ(0,3))", "BelowLim(1)", {"join": [...]}, {"dirFam": {"head", "tail"}},
/// {"image": {"map": ..., "of": ...}}.
IdealTerm parse_ideal_term(const Json& doc, const InstanceResolver& resolve);
ChainIdeal parse_chain_ideal(const std::string& text);

Json to_json(const AxiomReport& report);
Json to_json(const LawReport& report);

/// The frame of round ideals of an instance: element classification, ς on
/// classes, ≪ and ⊑.
Json compactify(const Instance& inst);
std::string compactify_text(const Instance& inst);
std::string compactify_dot(const Instance& inst);

/// "ω·k + n" for a chain shape.
std::string order_type(const ChainShape& shape);

}  // namespace proxkit
