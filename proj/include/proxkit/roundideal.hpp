#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "proxkit/chain.hpp"
#include "proxkit/finite_map.hpp"
#include "proxkit/proximity.hpp"

namespace proxkit {

// ---- finite frames ---------------------------------------------------------
// Ideals are ElemSets of the base frame.

bool is_ideal(const FiniteFrame& frame, ElemSet s) noexcept;
bool is_round_ideal(const FiniteProxFrame& p, ElemSet s) noexcept;

/// The frame ℜL of round ideals ordered by inclusion, with both of its
/// proximities. Elements are named "↓a" after their generator.
struct FiniteRoundIdeals {
  FiniteProxFrame base;
  std::vector<ElemSet> members;  // members[i] = ideal i as a subset of base
  FiniteProxFrame way_below;     // (ℜL, ≪)
  FiniteProxFrame max_proximity; // (ℜL, ⊑)

  std::optional<Elem> index_of(ElemSet ideal) const noexcept;
  /// Throws UnsupportedRepresentation when `ideal` is not a round ideal.
  Elem locate(ElemSet ideal) const;
};

FiniteRoundIdeals round_ideal_frame(const FiniteProxFrame& p);

/// κ(a) = {b : b ≺ a}.
ElemSet kappa(const FiniteProxFrame& p, Elem a);
/// ς(I) = ⋁I.
Elem sigma(const FiniteProxFrame& p, ElemSet ideal);
ElemSet ideal_meet(ElemSet i, ElemSet j) noexcept;
/// {x : x ≤ a ∨ b for some a ∈ I, b ∈ J}.
ElemSet ideal_join(const FiniteFrame& frame, ElemSet i, ElemSet j);
/// Union of a directed family of ideals. Throws NotDirected.
ElemSet dir_sup(const FiniteFrame& frame, std::span<const ElemSet> family);
/// I ≪ J iff I ⊆ ↓a for some a ∈ J.
bool way_below_ideals(const FiniteFrame& frame, ElemSet i, ElemSet j) noexcept;
/// ℜf(I) = {a : a ≺ f(b) for some b ∈ I}.
ElemSet rmap(const FiniteMap& f, ElemSet ideal);
/// α(a) = {b : b ≪ a}; on a finite frame ≪ is ≤.
ElemSet alpha(const FiniteProxFrame& p, Elem a);

/// All ideals of the frame, found by closing each element under the ideal
/// operations, carrying ≤ as proximity. Used to compare against ℜ(L, ≤).
FiniteRoundIdeals ideal_frame(std::shared_ptr<const FiniteFrame> frame);

// ---- chain frames ----------------------------------------------------------

/// Throws UnsupportedRepresentation unless `ideal` is a canonical round ideal of p.
void check_round(const ProxChain& p, const ChainIdeal& ideal);

ChainIdeal kappa(const ProxChain& p, Code a);
Code sigma(const ProxChain& p, const ChainIdeal& ideal);
inline bool member(Code b, const ChainIdeal& ideal) noexcept { return ideal.contains(b); }
ChainIdeal ideal_meet(const ChainIdeal& i, const ChainIdeal& j) noexcept;
ChainIdeal ideal_join(const ChainIdeal& i, const ChainIdeal& j) noexcept;
/// Union of the principal ideals Prin(gens(n)), n ≥ 0. Every generator must
/// be reflexive.
ChainIdeal dir_sup(const ProxChain& p, const ElementFamily& gens);
bool way_below_ideals(const ChainIdeal& i, const ChainIdeal& j) noexcept;
/// ℜf on a canonical ideal, computed from generators and block suprema.
ChainIdeal rmap(const ChainMap& f, const ChainIdeal& ideal);

/// A chain frame is stably compact iff its top is not a limit.
bool is_stably_compact(const ProxChain& p) noexcept;
/// {b : b ≪ a}. Throws NotStablyCompact.
ChainIdeal alpha(const ProxChain& p, Code a);

/// Frame of all ideals of the chain with its way-below relation; the same
/// object as round_ideal_chain(chain_order_proximity(shape)), built from the
/// classification Prin(x) for every x plus BelowLim(q) for every limit.
ProxChain ideal_frame(const ChainShape& shape);

// ---- symbolic ideal terms --------------------------------------------------

/// Input term for a round ideal of a chain frame: a canonical ideal, a finite
/// join, a described directed family of principal ideals, or an image ℜf(I).
struct IdealTerm {
  enum class Kind { canonical, join, dir_fam, image };
  Kind kind = Kind::canonical;
  ChainIdeal ideal;
  std::vector<IdealTerm> parts;       // join: operands; image: the single argument
  ElementFamily family;               // dir_fam generators
  std::shared_ptr<const ChainMap> map;  // image

  static IdealTerm canonical(ChainIdeal i) { return {Kind::canonical, i}; }
  static IdealTerm join(std::vector<IdealTerm> parts) { return {Kind::join, {}, std::move(parts)}; }
  static IdealTerm dir_fam(ElementFamily f) { return {Kind::dir_fam, {}, {}, std::move(f)}; }
  static IdealTerm image(std::shared_ptr<const ChainMap> f, IdealTerm arg) {
    IdealTerm t{Kind::image};
    t.parts.push_back(std::move(arg));
    t.map = std::move(f);
    return t;
  }
};

inline constexpr std::size_t kDefaultBudget = 10000;

/// Canonical form of a term over p. Each visited node costs one unit of
/// budget; running out throws UnsupportedRepresentation rather than guessing.
ChainIdeal normalize(const ProxChain& p, const IdealTerm& term, std::size_t budget = kDefaultBudget);

}  // namespace proxkit
