#include "proxkit/finite_map.hpp"

#include "proxkit/error.hpp"

namespace proxkit {

FiniteMap make_map(FiniteProxFrame dom, FiniteProxFrame cod, std::vector<Elem> table) {
  if (table.size() != dom.size()) {
    throw Error(ErrorKind::MalformedMap, "table has " + std::to_string(table.size()) + " entries for " +
                                             std::to_string(dom.size()) + " elements");
  }
  for (Elem v : table) {
    if (v >= cod.size()) throw Error(ErrorKind::MalformedMap, "table value outside the codomain");
  }
  return FiniteMap{std::move(dom), std::move(cod), std::move(table)};
}

FiniteMap identity_map(const FiniteProxFrame& p) {
  std::vector<Elem> table(p.size());
  for (Elem x = 0; x < p.size(); ++x) table[x] = x;
  return FiniteMap{p, p, std::move(table)};
}

FiniteMap compose(const FiniteMap& g, const FiniteMap& f) {
  if (!(f.cod == g.dom)) throw Error(ErrorKind::NotComposable, "codomain and domain differ");
  std::vector<Elem> table(f.dom.size());
  for (Elem x = 0; x < f.dom.size(); ++x) table[x] = g(f(x));
  return FiniteMap{f.dom, g.cod, std::move(table)};
}

FiniteMap retag(const FiniteMap& f, FiniteProxFrame dom, FiniteProxFrame cod) {
  if (*dom.frame != *f.dom.frame || *cod.frame != *f.cod.frame) {
    throw Error(ErrorKind::NotComposable, "retag needs identical frames");
  }
  return FiniteMap{std::move(dom), std::move(cod), f.table};
}

std::optional<Elem> first_difference(const FiniteMap& f, const FiniteMap& g) {
  if (f.table.size() != g.table.size()) throw Error(ErrorKind::NotComposable, "maps have different domains");
  for (Elem x = 0; x < f.table.size(); ++x) {
    if (f(x) != g(x)) return x;
  }
  return std::nullopt;
}

std::optional<Elem> first_not_leq(const FiniteMap& f, const FiniteMap& g) {
  if (f.table.size() != g.table.size()) throw Error(ErrorKind::NotComposable, "maps have different domains");
  for (Elem x = 0; x < f.table.size(); ++x) {
    if (!f.cod.frame->leq(f(x), g(x))) return x;
  }
  return std::nullopt;
}

}  // namespace proxkit
