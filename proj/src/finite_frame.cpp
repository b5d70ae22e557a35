#include "proxkit/finite_frame.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "proxkit/error.hpp"

namespace proxkit {
namespace {

void check_size(std::size_t n, std::string_view what) {
  if (n == 0) throw Error(ErrorKind::InvalidParameter, std::string(what) + " has no elements");
  if (n > kMaxFiniteElements) {
    throw Error(ErrorKind::TooLarge, std::string(what) + " has " + std::to_string(n) +
                                         " elements; the limit is 64");
  }
}

std::string set_id(ElemSet members, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for_each_member(members, [&](Elem e) {
    if (!first) out += ',';
    out += names[e];
    first = false;
  });
  return out + "}";
}

}  // namespace

FiniteFrame FiniteFrame::build(std::span<const std::string> ids, std::span<const LeqPair> leq,
                               Exec exec) {
  check_size(ids.size(), "frame");
  std::map<std::string, Elem, std::less<>> index;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!index.emplace(ids[i], static_cast<Elem>(i)).second) {
      throw Error(ErrorKind::InvalidParameter, "duplicate element id '" + ids[i] + "'", {ids[i]});
    }
  }
  const auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) {
      throw Error(ErrorKind::ParseError, "leq pair references unknown id '" + id + "'", {id});
    }
    return it->second;
  };
  std::vector<ElemSet> down(ids.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) down[i] = singleton(static_cast<Elem>(i));
  for (const auto& [lo, hi] : leq) down[lookup(hi)] |= singleton(lookup(lo));
  // Warshall closure on down-sets.
  for (std::size_t k = 0; k < ids.size(); ++k) {
    for (std::size_t b = 0; b < ids.size(); ++b) {
      if (contains(down[b], static_cast<Elem>(k))) down[b] |= down[k];
    }
  }
  return from_order(std::vector<std::string>(ids.begin(), ids.end()), std::move(down), exec);
}

FiniteFrame FiniteFrame::from_order(std::vector<std::string> ids, std::vector<ElemSet> down,
                                    Exec exec) {
  const std::size_t n = ids.size();
  check_size(n, "frame");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (contains(down[a], static_cast<Elem>(b)) && contains(down[b], static_cast<Elem>(a))) {
        throw Error(ErrorKind::NotAPoset, "'" + ids[a] + "' and '" + ids[b] + "' are mutually below",
                    {ids[a], ids[b]});
      }
    }
  }

  // Kahn topological sort, ties by id.
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t b = 0; b < n; ++b) pending[b] = std::popcount(down[b]) - 1;
  auto by_id = [&](std::size_t x, std::size_t y) { return ids[x] > ids[y]; };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(by_id)> ready(by_id);
  for (std::size_t b = 0; b < n; ++b) {
    if (pending[b] == 0) ready.push(b);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t x = ready.top();
    ready.pop();
    order.push_back(x);
    for (std::size_t b = 0; b < n; ++b) {
      if (b != x && contains(down[b], static_cast<Elem>(x)) && --pending[b] == 0) ready.push(b);
    }
  }
  if (order.size() != n) throw Error(ErrorKind::NotAPoset, "order relation has a cycle");

  std::vector<Elem> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<Elem>(i);

  FiniteFrame f;
  f.ids_.resize(n);
  f.down_.assign(n, 0);
  f.up_.assign(n, 0);
  for (std::size_t old = 0; old < n; ++old) {
    f.ids_[rank[old]] = std::move(ids[old]);
    ElemSet d = 0;
    for_each_member(down[old], [&](Elem e) { d |= singleton(rank[e]); });
    f.down_[rank[old]] = d;
  }
  for (Elem b = 0; b < n; ++b) {
    for_each_member(f.down_[b], [&](Elem a) { f.up_[a] |= singleton(b); });
  }

  // Bounds: canonical order puts a global bottom first and a global top last.
  if (f.up_[0] != f.all() || f.down_[n - 1] != f.all()) {
    std::vector<std::string> w;
    if (f.up_[0] != f.all()) w.push_back(f.ids_[0]);
    if (f.down_[n - 1] != f.all()) w.push_back(f.ids_[n - 1]);
    throw Error(ErrorKind::NoBounds, "order lacks a global bottom or top", std::move(w));
  }

  f.meet_.assign(n * n, 0);
  f.join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      const ElemSet lower = f.down_[a] & f.down_[b];
      const ElemSet upper = f.up_[a] & f.up_[b];
      std::optional<Elem> glb, lub;
      for_each_member(lower, [&](Elem g) {
        if (f.down_[g] == lower) glb = g;
      });
      for_each_member(upper, [&](Elem l) {
        if (f.up_[l] == upper) lub = l;
      });
      if (!glb || !lub) {
        throw Error(ErrorKind::NotALattice,
                    std::string(glb ? "no least upper bound" : "no greatest lower bound") +
                        " for '" + f.ids_[a] + "' and '" + f.ids_[b] + "'",
                    {f.ids_[a], f.ids_[b]});
      }
      f.meet_[a * n + b] = f.meet_[b * n + a] = *glb;
      f.join_[a * n + b] = f.join_[b * n + a] = *lub;
    }
  }

  if (auto t = find_distributivity_failure(n, f.meet_, f.join_, exec)) {
    throw Error(ErrorKind::NotDistributive,
                "a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c) at a='" + f.ids_[t->a] + "', b='" + f.ids_[t->b] +
                    "', c='" + f.ids_[t->c] + "'",
                {f.ids_[t->a], f.ids_[t->b], f.ids_[t->c]});
  }

  f.pseudo_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    ElemSet disjoint = 0;
    for (Elem x = 0; x < n; ++x) {
      if (f.meet(a, x) == f.bot()) disjoint |= singleton(x);
    }
    f.pseudo_[a] = f.join_of(disjoint);
  }
  return f;
}

Elem FiniteFrame::join_of(ElemSet s) const noexcept {
  Elem acc = bot();
  for_each_member(s, [&](Elem e) { acc = join(acc, e); });
  return acc;
}

Elem FiniteFrame::meet_of(ElemSet s) const noexcept {
  Elem acc = top();
  for_each_member(s, [&](Elem e) { acc = meet(acc, e); });
  return acc;
}

std::optional<Elem> FiniteFrame::find(std::string_view id) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] == id) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

Elem FiniteFrame::at(std::string_view id) const {
  if (auto e = find(id)) return *e;
  throw Error(ErrorKind::ParseError, "unknown element id '" + std::string(id) + "'",
              {std::string(id)});
}

std::vector<std::pair<Elem, Elem>> FiniteFrame::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < size(); ++a) {
    const ElemSet strictly_above = up_[a] & ~singleton(a);
    for_each_member(strictly_above, [&](Elem b) {
      // b covers a iff nothing strictly between
      const ElemSet between = strictly_above & down_[b] & ~singleton(b);
      if (between == 0) out.emplace_back(a, b);
    });
  }
  return out;
}

std::string to_dot(const FiniteFrame& frame, std::string_view graph_name) {
  std::ostringstream os;
  os << "digraph \"" << graph_name << "\" {\n  rankdir=BT;\n";
  for (Elem e = 0; e < frame.size(); ++e) os << "  \"" << frame.id(e) << "\";\n";
  for (const auto& [a, b] : frame.covers()) {
    os << "  \"" << frame.id(a) << "\" -> \"" << frame.id(b) << "\";\n";
  }
  os << "}\n";
  return os.str();
}

// ---- constructions -------------------------------------------------------

FiniteFrame downset_frame(const Poset& poset) {
  const std::size_t n = poset.elements.size();
  if (n > 20) throw Error(ErrorKind::TooLarge, "downset frame limited to posets of <= 20 points");
  std::map<std::string, Elem, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(poset.elements[i], static_cast<Elem>(i)).second) {
      throw Error(ErrorKind::InvalidParameter, "duplicate poset element '" + poset.elements[i] + "'");
    }
  }
  std::vector<std::uint32_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i) below[i] = 1u << i;
  for (const auto& [lo, hi] : poset.leq) {
    auto l = index.find(lo), h = index.find(hi);
    if (l == index.end() || h == index.end()) {
      throw Error(ErrorKind::ParseError, "poset pair references unknown id");
    }
    below[h->second] |= 1u << l->second;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((below[b] >> k) & 1u) below[b] |= below[k];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (((below[a] >> b) & 1u) && ((below[b] >> a) & 1u)) {
        throw Error(ErrorKind::NotAPoset, "poset order has a cycle",
                    {poset.elements[a], poset.elements[b]});
      }
    }
  }
  std::vector<std::uint32_t> downsets;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool closed = true;
    for (std::size_t x = 0; x < n && closed; ++x) {
      if (((s >> x) & 1u) && (below[x] & ~s) != 0) closed = false;
    }
    if (closed) {
      downsets.push_back(s);
      if (downsets.size() > kMaxFiniteElements) {
        throw Error(ErrorKind::TooLarge, "poset has more than 64 downsets");
      }
    }
  }
  std::vector<std::string> ids;
  std::vector<ElemSet> down(downsets.size(), 0);
  for (std::size_t i = 0; i < downsets.size(); ++i) {
    ids.push_back(set_id(downsets[i], poset.elements));
    for (std::size_t j = 0; j < downsets.size(); ++j) {
      if ((downsets[j] & ~downsets[i]) == 0) down[i] |= singleton(static_cast<Elem>(j));
    }
  }
  return FiniteFrame::from_order(std::move(ids), std::move(down));
}

FiniteFrame open_set_frame(const Topology& topology) {
  const std::size_t n = topology.points.size();
  if (n > 64) throw Error(ErrorKind::TooLarge, "topology limited to 64 points");
  std::map<std::string, Elem, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(topology.points[i], static_cast<Elem>(i)).second) {
      throw Error(ErrorKind::InvalidParameter, "duplicate point '" + topology.points[i] + "'");
    }
  }
  std::set<ElemSet> opens;
  for (const auto& open : topology.opens) {
    ElemSet s = 0;
    for (const auto& p : open) {
      auto it = index.find(p);
      if (it == index.end()) {
        throw Error(ErrorKind::ParseError, "open set references unknown point '" + p + "'", {p});
      }
      s |= singleton(it->second);
    }
    opens.insert(s);
  }
  const ElemSet whole = n == 64 ? ~ElemSet{0} : (ElemSet{1} << n) - 1;
  if (!opens.contains(0)) throw Error(ErrorKind::NotATopology, "empty set is not open", {"{}"});
  if (!opens.contains(whole)) {
    throw Error(ErrorKind::NotATopology, "whole space is not open",
                {set_id(whole, topology.points)});
  }
  for (ElemSet u : opens) {
    for (ElemSet v : opens) {
      if (!opens.contains(u | v) || !opens.contains(u & v)) {
        throw Error(ErrorKind::NotATopology,
                    std::string(opens.contains(u | v) ? "intersection" : "union") + " of " +
                        set_id(u, topology.points) + " and " + set_id(v, topology.points) +
                        " is not open",
                    {set_id(u, topology.points), set_id(v, topology.points)});
      }
    }
  }
  if (opens.size() > kMaxFiniteElements) throw Error(ErrorKind::TooLarge, "more than 64 opens");
  std::vector<ElemSet> list(opens.begin(), opens.end());
  std::vector<std::string> ids;
  std::vector<ElemSet> down(list.size(), 0);
  for (std::size_t i = 0; i < list.size(); ++i) {
    ids.push_back(set_id(list[i], topology.points));
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (is_subset(list[j], list[i])) down[i] |= singleton(static_cast<Elem>(j));
    }
  }
  return FiniteFrame::from_order(std::move(ids), std::move(down));
}

FiniteFrame product(const FiniteFrame& left, const FiniteFrame& right) {
  const std::size_t n = left.size() * right.size();
  if (n > kMaxFiniteElements) {
    throw Error(ErrorKind::TooLarge, "product has " + std::to_string(n) + " elements");
  }
  std::vector<std::string> ids;
  std::vector<ElemSet> down(n, 0);
  for (Elem a = 0; a < left.size(); ++a) {
    for (Elem b = 0; b < right.size(); ++b) {
      ids.push_back("(" + left.id(a) + "," + right.id(b) + ")");
      const std::size_t i = a * right.size() + b;
      for (Elem c = 0; c < left.size(); ++c) {
        for (Elem d = 0; d < right.size(); ++d) {
          if (left.leq(c, a) && right.leq(d, b)) down[i] |= singleton(static_cast<Elem>(c * right.size() + d));
        }
      }
    }
  }
  return FiniteFrame::from_order(std::move(ids), std::move(down));
}

FiniteFrame chain_frame(std::size_t n) {
  check_size(n, "chain");
  std::vector<std::string> ids;
  std::vector<ElemSet> down(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(std::to_string(i));
    down[i] = (i + 1 == 64) ? ~ElemSet{0} : (ElemSet{1} << (i + 1)) - 1;
  }
  return FiniteFrame::from_order(std::move(ids), std::move(down));
}

FiniteFrame boolean_cube(std::size_t d) {
  if (d > 6) throw Error(ErrorKind::TooLarge, "Boolean cube limited to 2^6");
  Poset antichain;
  for (std::size_t i = 0; i < d; ++i) antichain.elements.push_back(std::string(1, char('p' + i)));
  return downset_frame(antichain);
}

}  // namespace proxkit
