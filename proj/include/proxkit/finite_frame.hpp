#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "proxkit/exec.hpp"

namespace proxkit {

/// Canonical index of an element of a finite frame.
using Elem = std::uint32_t;
/// Subset of a finite frame's carrier, bit i = element i.
using ElemSet = std::uint64_t;

inline constexpr std::size_t kMaxFiniteElements = 64;

inline constexpr bool contains(ElemSet s, Elem e) noexcept { return (s >> e) & 1u; }
inline constexpr ElemSet singleton(Elem e) noexcept { return ElemSet{1} << e; }
inline constexpr bool is_subset(ElemSet a, ElemSet b) noexcept { return (a & ~b) == 0; }

/// Iterates the members of an ElemSet in increasing index order.
template <class F>
void for_each_member(ElemSet s, F&& f) {
  while (s != 0) {
    f(static_cast<Elem>(std::countr_zero(s)));
    s &= s - 1;
  }
}

using LeqPair = std::pair<std::string, std::string>;

/// A finite distributive lattice (= finite frame) with precomputed order
/// bitsets and meet/join tables. Elements are canonically indexed by a
/// topological sort of the order, ties broken by id.
class FiniteFrame {
 public:
  /// Builds from ids and generating order pairs (reflexive-transitive
  /// closure is taken). Throws Error on any invalid input.
  static FiniteFrame build(std::span<const std::string> ids, std::span<const LeqPair> leq,
                           Exec exec = Exec::parallel);

  /// Builds from a complete order given as down-sets: down[b] = {a : a <= b}.
  /// Indices of `ids`/`down` need not be canonical.
  static FiniteFrame from_order(std::vector<std::string> ids, std::vector<ElemSet> down,
                                Exec exec = Exec::parallel);

  std::size_t size() const noexcept { return ids_.size(); }
  ElemSet all() const noexcept {
    return size() == 64 ? ~ElemSet{0} : (ElemSet{1} << size()) - 1;
  }

  bool leq(Elem a, Elem b) const noexcept { return contains(down_[b], a); }
  ElemSet down(Elem a) const noexcept { return down_[a]; }
  ElemSet up(Elem a) const noexcept { return up_[a]; }

  Elem meet(Elem a, Elem b) const noexcept { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const noexcept { return join_[a * size() + b]; }
  Elem bot() const noexcept { return 0; }
  Elem top() const noexcept { return static_cast<Elem>(size() - 1); }
  Elem pseudocomplement(Elem a) const noexcept { return pseudo_[a]; }

  /// Join of a subset; the empty join is bot.
  Elem join_of(ElemSet s) const noexcept;
  /// Meet of a subset; the empty meet is top.
  Elem meet_of(ElemSet s) const noexcept;

  const std::string& id(Elem e) const { return ids_[e]; }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<Elem> find(std::string_view id) const;
  /// Like find, but throws ParseError naming the unknown id.
  Elem at(std::string_view id) const;

  /// Covering pairs (a, b): a < b with nothing strictly between, sorted.
  std::vector<std::pair<Elem, Elem>> covers() const;

  bool operator==(const FiniteFrame& other) const {
    return ids_ == other.ids_ && down_ == other.down_;
  }

 private:
  FiniteFrame() = default;

  std::vector<std::string> ids_;
  std::vector<ElemSet> down_;
  std::vector<ElemSet> up_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> pseudo_;
};

/// Returns the first triple (a, b, c) with a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c),
/// scanning triples in lexicographic order. Tables are n*n row-major.
struct Triple {
  Elem a, b, c;
  bool operator==(const Triple&) const = default;
};
std::optional<Triple> find_distributivity_failure(std::size_t n, std::span<const Elem> meet,
                                                  std::span<const Elem> join, Exec exec);

/// a ≪ b. Every directed subset of a finite lattice contains its join, so
/// this is a ≤ b.
inline bool way_below(const FiniteFrame& frame, Elem a, Elem b) noexcept { return frame.leq(a, b); }

/// Graphviz DOT text of the Hasse diagram (covering edges only).
std::string to_dot(const FiniteFrame& frame, std::string_view graph_name = "hasse");

// ---- constructions -------------------------------------------------------

struct Poset {
  std::vector<std::string> elements;
  std::vector<LeqPair> leq;
};

struct Topology {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> opens;
};

/// Frame of downsets of a finite poset ordered by inclusion.
FiniteFrame downset_frame(const Poset& poset);
/// Frame of open sets of a finite topology ordered by inclusion.
FiniteFrame open_set_frame(const Topology& topology);
/// Componentwise product.
FiniteFrame product(const FiniteFrame& left, const FiniteFrame& right);

/// n-element chain "0" < "1" < ... < "n-1".
FiniteFrame chain_frame(std::size_t n);
/// Boolean cube 2^d as the downset frame of a d-element antichain.
FiniteFrame boolean_cube(std::size_t d);

}  // namespace proxkit
