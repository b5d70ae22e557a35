#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace proxkit {

/// Element of a chain frame, read as the ordinal ω·block + offset.
/// Lexicographic comparison is the chain order.
struct Code {
  std::uint32_t block = 0;
  std::uint64_t offset = 0;
  auto operator<=>(const Code&) const = default;
};

inline constexpr bool is_limit(Code c) noexcept { return c.block >= 1 && c.offset == 0; }

/// Carrier of a chain frame: the ordinals 0 .. ω·k + m. Blocks 0..k-1 are
/// infinite (ω-sequences); block k is finite and holds offsets 0..m.
/// With m = 0 this is the chain-with-limits frame with k limit blocks.
struct ChainShape {
  std::uint32_t k = 1;
  std::uint64_t m = 0;

  bool contains(Code c) const noexcept { return c.block < k || (c.block == k && c.offset <= m); }
  bool finite_block(std::uint32_t q) const noexcept { return q == k; }
  Code bot() const noexcept { return {0, 0}; }
  Code top() const noexcept { return {k, m}; }
  auto operator<=>(const ChainShape&) const = default;
};

inline constexpr std::uint32_t kMaxChainBlocks = 63;

/// The chain-with-limits frame: Succ(i, n) for 0 <= i < k, Lim(i) for
/// 1 <= i <= k, ordered Succ(i, n) < Lim(i+1) < Succ(i+1, 0). Throws
/// InvalidParameter unless 1 <= k <= 63.
ChainShape build_chain_frame(std::uint32_t k);

/// Succ(i, n) and Lim(i) in code form. The same naming extends to any shape:
/// offset 0 of a block q >= 1 is Lim(q), offset r >= 1 is Succ(q, r - 1).
constexpr Code succ(std::uint32_t i, std::uint64_t n) noexcept { return {i, n + (i >= 1 ? 1 : 0)}; }
constexpr Code lim(std::uint32_t i) noexcept { return {i, 0}; }

std::string element_name(Code c);
/// Parses "Succ(i,n)" or "Lim(i)"; throws ParseError.
Code parse_element(std::string_view text);

// Lattice operations on chains: min/max and code comparison.
inline Code meet(Code a, Code b) noexcept { return a < b ? a : b; }
inline Code join(Code a, Code b) noexcept { return a < b ? b : a; }

/// a ≪ b in a complete chain: a <= b and (b is not a limit, or a < b).
inline bool way_below(Code a, Code b) noexcept { return a <= b && (!is_limit(b) || a < b); }

/// Affine piece offset = slope * r + intercept in a fixed block.
struct Tail {
  std::uint32_t block = 0;
  std::uint64_t slope = 0;
  std::int64_t intercept = 0;

  Code at(std::uint64_t r) const noexcept {
    return {block, static_cast<std::uint64_t>(static_cast<std::int64_t>(slope * r) + intercept)};
  }
  bool operator==(const Tail&) const = default;
};

inline Tail constant_tail(Code c) noexcept { return {c.block, 0, static_cast<std::int64_t>(c.offset)}; }

/// A finitely described sequence of chain elements: explicit values for
/// indices below head.size(), an affine tail for the rest. Used both as the
/// monotone element families whose suprema chain frames can compute, and as
/// the per-block description of eventually-affine maps.
struct AffineSeq {
  std::vector<Code> head;
  Tail tail;

  Code at(std::uint64_t n) const noexcept { return n < head.size() ? head[n] : tail.at(n); }
  /// Tail offsets stay non-negative on their whole domain.
  bool well_formed() const noexcept;
  bool is_monotone() const noexcept;
  /// Supremum of the whole (monotone) sequence: Lim(block+1) when the tail
  /// grows, the constant otherwise.
  Code sup() const noexcept;
  bool sup_attained() const noexcept { return tail.slope == 0; }
  /// Drops trailing head entries that the tail already produces.
  void normalize();
  bool operator==(const AffineSeq&) const = default;
};

using ElementFamily = AffineSeq;

/// Proximity on a chain frame. On a well-ordered chain every proximity has
/// this form: a ≺ b iff a < b, or a = b and a is reflexive. Non-limit
/// elements are always reflexive; `reflexive_limits` (bit q for the limit
/// at block q) selects the reflexive limits.
struct ProxChain {
  ChainShape shape;
  std::uint64_t reflexive_limits = 0;

  bool reflexive(Code c) const noexcept {
    return !is_limit(c) || ((reflexive_limits >> c.block) & 1u);
  }
  bool rel(Code a, Code b) const noexcept { return a < b || (a == b && reflexive(a)); }
  /// 1 if the limit at block q is reflexive; the index shift it causes in ℜ.
  std::uint64_t shift(std::uint32_t q) const noexcept {
    return q >= 1 && ((reflexive_limits >> q) & 1u) ? 1 : 0;
  }
  std::vector<std::uint32_t> reflexive_limit_list() const;
  bool operator==(const ProxChain&) const = default;
};

/// Chain proximity with reflexive limit set R (block indices 1..k). Throws
/// InvalidReflexiveSet when the top is a limit not in R; InvalidParameter
/// for indices outside 1..k.
ProxChain chain_proximity(const ChainShape& shape, const std::vector<std::uint32_t>& reflexive);
/// ≤ as a proximity (every limit reflexive).
ProxChain chain_order_proximity(const ChainShape& shape);
/// ≪ as a relation (no limit reflexive); a proximity only when the top is not a limit.
ProxChain chain_way_below_relation(const ChainShape& shape);

/// "chain:k=2,m=0,R=[2]" style description.
std::string describe(const ProxChain& p);

/// Canonical round ideal of a chain proximity frame: a principal ideal of a
/// reflexive element, or the non-principal ideal of everything below a limit.
struct ChainIdeal {
  enum class Kind { prin, below_lim };
  Kind kind = Kind::prin;
  Code at;

  bool contains(Code x) const noexcept { return kind == Kind::prin ? x <= at : x < at; }
  bool operator==(const ChainIdeal&) const = default;
};

inline ChainIdeal prin(Code c) noexcept { return {ChainIdeal::Kind::prin, c}; }
inline ChainIdeal below_lim(std::uint32_t q) noexcept { return {ChainIdeal::Kind::below_lim, lim(q)}; }

std::string ideal_name(const ChainIdeal& ideal);

/// Inclusion of canonical ideals.
bool subideal(const ChainIdeal& a, const ChainIdeal& b) noexcept;

/// Shape and proximity of the frame of round ideals ℜL ordered by
/// inclusion, carrying ≪ as its proximity.
ProxChain round_ideal_chain(const ProxChain& p);
/// Same carrier as round_ideal_chain, carrying the maximal proximity ⊑.
ProxChain max_proximity_chain(const ProxChain& p);

/// Position of a canonical round ideal of p inside round_ideal_chain(p),
/// and back. Throws UnsupportedRepresentation for non-round input.
Code encode(const ProxChain& p, const ChainIdeal& ideal);
ChainIdeal decode(const ProxChain& p, Code code);

/// Eventually-affine monotone-candidate map between chain frames, one
/// AffineSeq per domain block. Kept in normal form, so == is pointwise
/// equality.
class ChainMap {
 public:
  /// Throws MalformedMap if a value leaves the codomain or a tail is ill-formed.
  ChainMap(ProxChain dom, ProxChain cod, std::vector<AffineSeq> blocks);

  const ProxChain& dom() const noexcept { return dom_; }
  const ProxChain& cod() const noexcept { return cod_; }
  const std::vector<AffineSeq>& blocks() const noexcept { return blocks_; }

  Code operator()(Code x) const noexcept { return blocks_[x.block].at(x.offset); }

  /// sup of the map over block q, i.e. over the elements strictly below the
  /// limit of block q + 1.
  Code block_sup(std::uint32_t q) const noexcept;
  bool block_sup_attained(std::uint32_t q) const noexcept;

  ChainMap with_value(Code x, Code value) const;
  /// Same code map between other proximities on the same shapes.
  ChainMap retag(ProxChain dom, ProxChain cod) const;

  bool operator==(const ChainMap&) const = default;

 private:
  void normalize();

  ProxChain dom_;
  ProxChain cod_;
  std::vector<AffineSeq> blocks_;
};

ChainMap identity_map(const ProxChain& p);
/// g ∘ f, exact on the symbolic representation. Throws NotComposable.
ChainMap compose(const ChainMap& g, const ChainMap& f);
/// First point where f and g differ, or nullopt if equal.
std::optional<Code> first_difference(const ChainMap& f, const ChainMap& g);
/// First point x with f(x) ≰ g(x), or nullopt if f <= g pointwise.
std::optional<Code> first_not_leq(const ChainMap& f, const ChainMap& g);
/// Number of points mapped to `target` (saturating at 2) and whether one
/// of them satisfies `pred`; used for preimage-based property checks.
struct Preimage {
  std::uint64_t count = 0;  // 0, 1 or 2 (= at least two)
  std::optional<Code> first;
  std::optional<Code> second;
};
Preimage preimage(const ChainMap& f, Code target);

}  // namespace proxkit
