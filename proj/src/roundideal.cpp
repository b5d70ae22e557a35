#include "proxkit/roundideal.hpp"

#include <algorithm>

#include "proxkit/error.hpp"

namespace proxkit {

// ---- finite frames ---------------------------------------------------------

bool is_ideal(const FiniteFrame& f, ElemSet s) noexcept {
  if (!contains(s, f.bot()) || !is_subset(s, f.all())) return false;
  bool ok = true;
  for_each_member(s, [&](Elem a) {
    ok = ok && is_subset(f.down(a), s);
    for_each_member(s, [&](Elem b) { ok = ok && contains(s, f.join(a, b)); });
  });
  return ok;
}

bool is_round_ideal(const FiniteProxFrame& p, ElemSet s) noexcept {
  if (!is_ideal(*p.frame, s)) return false;
  bool ok = true;
  for_each_member(s, [&](Elem a) {
    bool bounded = false;
    for_each_member(s, [&](Elem b) { bounded = bounded || p.rel(a, b); });
    ok = ok && bounded;
  });
  return ok;
}

std::optional<Elem> FiniteRoundIdeals::index_of(ElemSet ideal) const noexcept {
  for (Elem i = 0; i < members.size(); ++i) {
    if (members[i] == ideal) return i;
  }
  return std::nullopt;
}

Elem FiniteRoundIdeals::locate(ElemSet ideal) const {
  if (auto i = index_of(ideal)) return *i;
  std::vector<std::string> names;
  for_each_member(ideal, [&](Elem e) { names.push_back(base.frame->id(e)); });
  throw Error(ErrorKind::UnsupportedRepresentation, "subset is not a round ideal of " + base.name, names);
}

namespace {

std::string wrap(const std::string& tag, const std::string& name) {
  return name.empty() ? std::string{} : tag + "(" + name + ")";
}

// Frame of the given ideals ordered by inclusion, with ≪ and ⊑ computed
// from their definitions.
FiniteRoundIdeals ideals_as_frame(const FiniteProxFrame& base, const std::vector<ElemSet>& ideals) {
  const FiniteFrame& f = *base.frame;
  std::vector<std::string> ids;
  std::vector<ElemSet> down(ideals.size(), 0);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    ids.push_back("↓" + f.id(f.join_of(ideals[i])));
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (is_subset(ideals[j], ideals[i])) down[i] |= singleton(static_cast<Elem>(j));
    }
  }
  auto frame = std::make_shared<const FiniteFrame>(FiniteFrame::from_order(ids, down));
  FiniteRoundIdeals out;
  out.base = base;
  out.members.assign(ideals.size(), 0);
  for (std::size_t i = 0; i < ideals.size(); ++i) out.members[frame->at(ids[i])] = ideals[i];

  const std::size_t n = frame->size();
  std::vector<ElemSet> wb(n, 0), sq(n, 0);
  for (Elem j = 0; j < n; ++j) {
    for (Elem i = 0; i < n; ++i) {
      const ElemSet I = out.members[i], J = out.members[j];
      if (way_below_ideals(f, I, J)) wb[j] |= singleton(i);
      if (is_subset(I, J) && base.rel(f.join_of(I), f.join_of(J))) sq[j] |= singleton(i);
    }
  }
  out.way_below = FiniteProxFrame{frame, std::move(wb), wrap("R", base.name)};
  out.max_proximity = FiniteProxFrame{frame, std::move(sq), wrap("C", base.name)};
  return out;
}

}  // namespace

FiniteRoundIdeals round_ideal_frame(const FiniteProxFrame& p) {
  // Every ideal of a finite lattice is principal, so the candidates are ↓x.
  std::vector<ElemSet> round;
  for (Elem x = 0; x < p.size(); ++x) {
    if (is_round_ideal(p, p.frame->down(x))) round.push_back(p.frame->down(x));
  }
  if (round.empty()) throw Error(ErrorKind::MalformedRelation, "relation has no round ideals");
  return ideals_as_frame(p, round);
}

ElemSet kappa(const FiniteProxFrame& p, Elem a) { return p.below[a]; }

Elem sigma(const FiniteProxFrame& p, ElemSet ideal) { return p.frame->join_of(ideal); }

ElemSet ideal_meet(ElemSet i, ElemSet j) noexcept { return i & j; }

ElemSet ideal_join(const FiniteFrame& f, ElemSet i, ElemSet j) {
  ElemSet out = 0;
  for_each_member(i, [&](Elem a) { for_each_member(j, [&](Elem b) { out |= f.down(f.join(a, b)); }); });
  return out;
}

ElemSet dir_sup(const FiniteFrame& f, std::span<const ElemSet> family) {
  if (family.empty()) throw Error(ErrorKind::NotDirected, "empty family is not directed");
  ElemSet out = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!is_ideal(f, family[i])) throw Error(ErrorKind::UnsupportedRepresentation, "family member is not an ideal");
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const bool bounded = std::any_of(family.begin(), family.end(),
                                       [&](ElemSet k) { return is_subset(family[i] | family[j], k); });
      if (!bounded) {
        throw Error(ErrorKind::NotDirected, "members " + std::to_string(i) + " and " + std::to_string(j) +
                                                " have no upper bound in the family");
      }
    }
    out |= family[i];
  }
  return out;
}

bool way_below_ideals(const FiniteFrame& f, ElemSet i, ElemSet j) noexcept {
  bool found = false;
  for_each_member(j, [&](Elem a) { found = found || is_subset(i, f.down(a)); });
  return found;
}

ElemSet rmap(const FiniteMap& f, ElemSet ideal) {
  ElemSet out = 0;
  for_each_member(ideal, [&](Elem b) { out |= f.cod.below[f(b)]; });
  return out;
}

ElemSet alpha(const FiniteProxFrame& p, Elem a) { return p.frame->down(a); }

FiniteRoundIdeals ideal_frame(std::shared_ptr<const FiniteFrame> frame) {
  const FiniteFrame& f = *frame;
  std::vector<ElemSet> ideals;
  for (Elem x = 0; x < f.size(); ++x) {
    ElemSet s = singleton(x) | singleton(f.bot());
    for (ElemSet prev = 0; prev != s;) {
      prev = s;
      for_each_member(prev, [&](Elem a) {
        s |= f.down(a);
        for_each_member(prev, [&](Elem b) { s |= singleton(f.join(a, b)); });
      });
    }
    if (std::find(ideals.begin(), ideals.end(), s) == ideals.end()) ideals.push_back(s);
  }
  return ideals_as_frame(order_proximity(frame, {}), ideals);
}

// ---- chain frames ----------------------------------------------------------

void check_round(const ProxChain& p, const ChainIdeal& ideal) {
  if (ideal.kind == ChainIdeal::Kind::below_lim) {
    if (!is_limit(ideal.at) || ideal.at.block > p.shape.k) {
      throw Error(ErrorKind::UnsupportedRepresentation, ideal_name(ideal) + " does not name a limit of the frame");
    }
    return;
  }
  if (!p.shape.contains(ideal.at)) {
    throw Error(ErrorKind::UnsupportedRepresentation, ideal_name(ideal) + " lies outside the frame");
  }
  if (!p.reflexive(ideal.at)) {
    throw Error(ErrorKind::UnsupportedRepresentation,
                ideal_name(ideal) + " is not round: " + element_name(ideal.at) + " is not reflexive",
                {element_name(ideal.at)});
  }
}

ChainIdeal kappa(const ProxChain& p, Code a) { return p.reflexive(a) ? prin(a) : below_lim(a.block); }

Code sigma(const ProxChain& p, const ChainIdeal& ideal) {
  check_round(p, ideal);
  if (ideal.kind == ChainIdeal::Kind::prin) return ideal.at;
  return ElementFamily{{}, Tail{ideal.at.block - 1, 1, 0}}.sup();
}

ChainIdeal ideal_meet(const ChainIdeal& i, const ChainIdeal& j) noexcept { return subideal(i, j) ? i : j; }
ChainIdeal ideal_join(const ChainIdeal& i, const ChainIdeal& j) noexcept { return subideal(i, j) ? j : i; }

ChainIdeal dir_sup(const ProxChain& p, const ElementFamily& gens) {
  const Tail& t = gens.tail;
  if (!gens.well_formed()) throw Error(ErrorKind::InvalidParameter, "family tail has negative offsets");
  if (t.slope >= 1 && t.block >= p.shape.k) {
    throw Error(ErrorKind::InvalidParameter, "growing family leaves the frame");
  }
  for (const Code& c : gens.head) check_round(p, prin(c));
  const Code first_tail = t.at(gens.head.size());
  check_round(p, prin(first_tail));  // later tail values are non-limits when the tail grows
  std::optional<Code> head_max;
  for (const Code& c : gens.head) head_max = head_max ? join(*head_max, c) : c;
  if (t.slope == 0) return prin(head_max ? join(*head_max, first_tail) : first_tail);
  const Code limit = lim(t.block + 1);
  if (head_max && limit <= *head_max) return prin(*head_max);
  return below_lim(limit.block);
}

bool way_below_ideals(const ChainIdeal& i, const ChainIdeal& j) noexcept {
  if (j.kind == ChainIdeal::Kind::prin) return subideal(i, j);
  return subideal(i, j) && !(i == j);
}

ChainIdeal rmap(const ChainMap& f, const ChainIdeal& ideal) {
  check_round(f.dom(), ideal);
  if (ideal.kind == ChainIdeal::Kind::prin) return kappa(f.cod(), f(ideal.at));
  const std::uint32_t q = ideal.at.block - 1;
  const Code s = f.block_sup(q);
  if (f.block_sup_attained(q)) return kappa(f.cod(), s);
  return below_lim(s.block);
}

bool is_stably_compact(const ProxChain& p) noexcept { return !is_limit(p.shape.top()); }

ChainIdeal alpha(const ProxChain& p, Code a) {
  if (!is_stably_compact(p)) {
    throw Error(ErrorKind::NotStablyCompact,
                describe(p) + ": top " + element_name(p.shape.top()) + " is a directed join of smaller elements");
  }
  return is_limit(a) ? below_lim(a.block) : prin(a);
}

ProxChain ideal_frame(const ChainShape& shape) {
  // Block q ≥ 1 of the ideal frame: BelowLim(q), Prin(Lim(q)), then the
  // principal ideals of the successors; block 0 is unchanged.
  return ProxChain{ChainShape{shape.k, shape.m + 1}, 0};
}

// ---- terms -----------------------------------------------------------------

namespace {

ChainIdeal normalize_rec(const ProxChain& p, const IdealTerm& term, std::size_t& budget) {
  if (budget == 0) {
    throw Error(ErrorKind::UnsupportedRepresentation, "normalization budget exhausted");
  }
  --budget;
  switch (term.kind) {
    case IdealTerm::Kind::canonical:
      check_round(p, term.ideal);
      return term.ideal;
    case IdealTerm::Kind::join: {
      ChainIdeal acc = prin(p.shape.bot());
      for (const auto& part : term.parts) acc = ideal_join(acc, normalize_rec(p, part, budget));
      return acc;
    }
    case IdealTerm::Kind::dir_fam:
      return dir_sup(p, term.family);
    case IdealTerm::Kind::image: {
      if (!term.map || term.parts.size() != 1) {
        throw Error(ErrorKind::UnsupportedRepresentation, "image term needs a map and one argument");
      }
      if (!(term.map->cod() == p)) throw Error(ErrorKind::NotComposable, "image lands in another frame");
      return rmap(*term.map, normalize_rec(term.map->dom(), term.parts.front(), budget));
    }
  }
  throw Error(ErrorKind::UnsupportedRepresentation, "unknown term");
}

}  // namespace

ChainIdeal normalize(const ProxChain& p, const IdealTerm& term, std::size_t budget) {
  return normalize_rec(p, term, budget);
}

}  // namespace proxkit
