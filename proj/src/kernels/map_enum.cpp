#include "proxkit/error.hpp"
#include "proxkit/morphisms.hpp"

namespace proxkit {
namespace {

// Monotone tables with f(0) = 0 and f(1) = 1, built in index order. Indices
// extend ≤, so every element below x is assigned before x.
struct TableSearch {
  const FiniteProxFrame& dom;
  const FiniteProxFrame& cod;
  MapClass cls;

  bool keep(const FiniteMap& f) const { return cls == MapClass::proxhom ? is_proxhom(f) : is_pframemap(f); }

  bool admissible(const std::vector<Elem>& table, Elem x, Elem v) const {
    const FiniteFrame& L = *dom.frame;
    const FiniteFrame& M = *cod.frame;
    if (x == L.bot() && v != M.bot()) return false;
    if (x == L.top() && v != M.top()) return false;
    bool ok = true;
    for_each_member(L.down(x) & ~singleton(x), [&](Elem y) { ok = ok && M.leq(table[y], v); });
    return ok;
  }

  void run(std::vector<Elem>& table, Elem x, std::vector<FiniteMap>& out) const {
    if (x == dom.size()) {
      FiniteMap f{dom, cod, table};
      if (keep(f)) out.push_back(std::move(f));
      return;
    }
    for (Elem v = 0; v < cod.size(); ++v) {
      if (!admissible(table, x, v)) continue;
      table[x] = v;
      run(table, x + 1, out);
    }
  }

  void prefixes(std::vector<Elem>& table, Elem x, Elem depth, std::vector<std::vector<Elem>>& out) const {
    if (x == depth) {
      out.push_back(table);
      return;
    }
    for (Elem v = 0; v < cod.size(); ++v) {
      if (!admissible(table, x, v)) continue;
      table[x] = v;
      prefixes(table, x + 1, depth, out);
    }
  }
};

}  // namespace

std::vector<FiniteMap> enumerate_maps(const FiniteProxFrame& dom, const FiniteProxFrame& cod, MapClass cls,
                                      Exec exec) {
  const TableSearch search{dom, cod, cls};
  std::vector<FiniteMap> result;
  std::vector<Elem> table(dom.size(), 0);
  if (exec == Exec::serial) {
    search.run(table, 0, result);
    return result;
  }
  const Elem depth = static_cast<Elem>(std::min<std::size_t>(dom.size(), 3));
  std::vector<std::vector<Elem>> starts;
  search.prefixes(table, 0, depth, starts);
  std::vector<std::vector<FiniteMap>> parts(starts.size());
  const long count = static_cast<long>(starts.size());
#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < count; ++s) {
    std::vector<Elem> local = starts[s];
    search.run(local, depth, parts[s]);
  }
  for (auto& part : parts) {
    for (auto& f : part) result.push_back(std::move(f));
  }
  return result;
}

}  // namespace proxkit
