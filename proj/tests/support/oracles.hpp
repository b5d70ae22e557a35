#pragma once
// Independent reference computations used by the unit and acceptance tests.
// They work from definitions on explicit sets and share no code with the
// library's decision procedures beyond the frame tables themselves.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "proxkit/finite_frame.hpp"

namespace oracle {

using proxkit::Elem;
using proxkit::FiniteFrame;

/// a ≪ b from the definition: every directed S with b ≤ ⋁S meets ↑a.
/// Directed subsets are enumerated explicitly (frames of at most 8 elements).
inline bool way_below_by_covers(const FiniteFrame& f, Elem a, Elem b) {
  const std::size_t n = f.size();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    bool directed = true;
    for (Elem x = 0; x < n && directed; ++x) {
      for (Elem y = 0; y < n && directed; ++y) {
        if (!((s >> x) & 1u) || !((s >> y) & 1u)) continue;
        bool bound = false;
        for (Elem z = 0; z < n; ++z) bound = bound || (((s >> z) & 1u) && f.leq(x, z) && f.leq(y, z));
        directed = bound;
      }
    }
    if (!directed) continue;
    Elem sup = f.bot();
    bool meets = false;
    for (Elem x = 0; x < n; ++x) {
      if ((s >> x) & 1u) {
        sup = f.join(sup, x);
        meets = meets || f.leq(a, x);
      }
    }
    if (f.leq(b, sup) && !meets) return false;
  }
  return true;
}

/// Order isomorphism by trying every bijection (at most 8 elements).
inline bool isomorphic(const FiniteFrame& f, const FiniteFrame& g) {
  if (f.size() != g.size()) return false;
  std::vector<Elem> perm(f.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Elem a = 0; a < f.size() && ok; ++a) {
      for (Elem b = 0; b < f.size() && ok; ++b) ok = f.leq(a, b) == g.leq(perm[a], perm[b]);
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

using Pair = std::pair<Elem, Elem>;

/// The axioms of a proximity evaluated literally on a set of pairs.
inline bool satisfies_axioms(const FiniteFrame& f, const std::set<Pair>& rel) {
  const auto r = [&](Elem a, Elem b) { return rel.count({a, b}) > 0; };
  const Elem n = static_cast<Elem>(f.size());
  for (auto [a, b] : rel) {
    if (!f.leq(a, b)) return false;
  }
  if (!r(f.bot(), f.bot()) || !r(f.top(), f.top())) return false;
  for (auto [a, b] : rel) {
    for (auto [c, d] : rel) {
      if (!r(f.meet(a, c), f.meet(b, d)) || !r(f.join(a, c), f.join(b, d))) return false;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        for (Elem d = 0; d < n; ++d) {
          if (f.leq(a, b) && r(b, c) && f.leq(c, d) && !r(a, d)) return false;
        }
      }
    }
  }
  for (auto [a, b] : rel) {
    bool found = false;
    for (Elem c = 0; c < n; ++c) found = found || (r(a, c) && r(c, b));
    if (!found) return false;
  }
  for (Elem a = 0; a < n; ++a) {
    Elem j = f.bot();
    for (Elem b = 0; b < n; ++b) {
      if (r(b, a)) j = f.join(j, b);
    }
    if (j != a) return false;
  }
  return true;
}

struct BruteCollapse {
  std::uint64_t subsets = 0;
  std::uint64_t survivors = 0;
  bool only_order = true;
};

/// Every subset of ≤ that contains (0,0) and (1,1), tested literally.
inline BruteCollapse brute_force_collapse(const FiniteFrame& f) {
  std::vector<Pair> order, optional;
  for (Elem a = 0; a < f.size(); ++a) {
    for (Elem b = 0; b < f.size(); ++b) {
      if (f.leq(a, b)) order.emplace_back(a, b);
    }
  }
  for (auto p : order) {
    if (p != Pair{f.bot(), f.bot()} && p != Pair{f.top(), f.top()}) optional.push_back(p);
  }
  BruteCollapse out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << optional.size()); ++s) {
    std::set<Pair> rel{{f.bot(), f.bot()}, {f.top(), f.top()}};
    for (std::size_t i = 0; i < optional.size(); ++i) {
      if ((s >> i) & 1u) rel.insert(optional[i]);
    }
    ++out.subsets;
    if (satisfies_axioms(f, rel)) {
      ++out.survivors;
      out.only_order = out.only_order && rel.size() == order.size();
    }
  }
  return out;
}

}  // namespace oracle

#include "proxkit/chain.hpp"

namespace oracle {

/// A subset of a chain frame given by a membership predicate.
struct ChainSet {
  std::string label;
  std::function<bool(proxkit::Code)> contains;
};

/// Window of a chain frame: offsets 0..n of every infinite block and the whole finite block.
inline std::vector<proxkit::Code> chain_window(const proxkit::ChainShape& s, std::uint64_t n) {
  std::vector<proxkit::Code> out;
  for (std::uint32_t q = 0; q < s.k; ++q) {
    for (std::uint64_t r = 0; r <= n; ++r) out.push_back({q, r});
  }
  for (std::uint64_t r = 0; r <= s.m; ++r) out.push_back({s.k, r});
  return out;
}

/// Round ideals generated by elements of the window of size n: the principal
/// down-sets ↓x and the unions of the increasing chains below each limit,
/// kept when every member inside a slightly larger window has a
/// ≺-successor in the set. Uses only p.rel and the order on codes.
inline std::vector<ChainSet> enumerate_chain_round_ideals(const proxkit::ProxChain& p, std::uint64_t n) {
  using proxkit::Code;
  const std::vector<Code> probe = chain_window(p.shape, n + 3);
  std::vector<ChainSet> candidates;
  for (Code x : chain_window(p.shape, n)) {
    candidates.push_back({"down " + proxkit::element_name(x), [x](Code y) { return y <= x; }});
  }
  for (std::uint32_t q = 1; q <= p.shape.k; ++q) {
    const Code l{q, 0};
    candidates.push_back({"union below " + proxkit::element_name(l), [l](Code y) { return y < l; }});
  }
  std::vector<ChainSet> out;
  for (const ChainSet& c : candidates) {
    bool round = true;
    for (Code a : probe) {
      if (!c.contains(a) || a.offset > n + 1) continue;
      bool witnessed = false;
      for (Code b : probe) witnessed = witnessed || (c.contains(b) && p.rel(a, b));
      round = round && witnessed;
    }
    if (round) out.push_back(c);
  }
  return out;
}

}  // namespace oracle

#include "proxkit/finite_map.hpp"

namespace oracle {

/// The homomorphism conditions read literally on a table: bounds, meets,
/// joint subadditivity on pairs of ≺-pairs, and approximation.
inline bool literal_proxhom(const proxkit::FiniteMap& f) {
  const FiniteFrame& L = *f.dom.frame;
  const FiniteFrame& M = *f.cod.frame;
  if (f(L.bot()) != M.bot() || f(L.top()) != M.top()) return false;
  for (Elem a = 0; a < L.size(); ++a) {
    for (Elem b = 0; b < L.size(); ++b) {
      if (f(L.meet(a, b)) != M.meet(f(a), f(b))) return false;
      for (Elem c = 0; c < L.size(); ++c) {
        for (Elem d = 0; d < L.size(); ++d) {
          if (f.dom.rel(a, b) && f.dom.rel(c, d) && !f.cod.rel(f(L.join(a, c)), M.join(f(b), f(d)))) return false;
        }
      }
    }
    Elem acc = M.bot();
    for (Elem b = 0; b < L.size(); ++b) {
      if (f.dom.rel(b, a)) acc = M.join(acc, f(b));
    }
    if (acc != f(a)) return false;
  }
  return true;
}

/// Every table L → M passing literal_proxhom, in lexicographic order.
inline std::vector<proxkit::FiniteMap> literal_proxhoms(const proxkit::FiniteProxFrame& L,
                                                        const proxkit::FiniteProxFrame& M) {
  std::vector<proxkit::FiniteMap> out;
  std::vector<Elem> table(L.size(), 0);
  while (true) {
    const proxkit::FiniteMap f{L, M, table};
    if (literal_proxhom(f)) out.push_back(f);
    std::size_t i = table.size();
    while (i > 0 && table[i - 1] + 1 == M.size()) table[--i] = 0;
    if (i == 0) break;
    ++table[i - 1];
  }
  return out;
}

}  // namespace oracle
