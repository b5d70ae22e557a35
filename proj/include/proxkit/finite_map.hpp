#pragma once

#include <optional>
#include <vector>

#include "proxkit/proximity.hpp"

namespace proxkit {

/// A map between finite proximity frames given by its full table.
struct FiniteMap {
  FiniteProxFrame dom;
  FiniteProxFrame cod;
  std::vector<Elem> table;

  Elem operator()(Elem x) const noexcept { return table[x]; }
  bool operator==(const FiniteMap&) const = default;
};

/// Throws MalformedMap when the table has the wrong length or leaves cod.
FiniteMap make_map(FiniteProxFrame dom, FiniteProxFrame cod, std::vector<Elem> table);
FiniteMap identity_map(const FiniteProxFrame& p);
/// g ∘ f. Throws NotComposable.
FiniteMap compose(const FiniteMap& g, const FiniteMap& f);
/// Same table between other relations on the same frames.
FiniteMap retag(const FiniteMap& f, FiniteProxFrame dom, FiniteProxFrame cod);
std::optional<Elem> first_difference(const FiniteMap& f, const FiniteMap& g);
std::optional<Elem> first_not_leq(const FiniteMap& f, const FiniteMap& g);

}  // namespace proxkit
