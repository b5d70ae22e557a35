#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "proxkit/chain.hpp"
#include "proxkit/exec.hpp"
#include "proxkit/finite_frame.hpp"
#include "proxkit/report.hpp"

namespace proxkit {

/// A relation on a finite frame, stored by columns: below[a] = {b : b ≺ a}.
struct FiniteProxFrame {
  std::shared_ptr<const FiniteFrame> frame;
  std::vector<ElemSet> below;
  std::string name;

  std::size_t size() const noexcept { return frame->size(); }
  bool rel(Elem a, Elem b) const noexcept { return contains(below[b], a); }
  bool operator==(const FiniteProxFrame& other) const {
    return (frame == other.frame || *frame == *other.frame) && below == other.below;
  }
};

enum class Verdict { pass, fail, symbolic };

struct AxiomCheck {
  std::string axiom;
  Verdict verdict = Verdict::pass;
  std::vector<std::string> witness;
  std::string detail;
};

/// Per-axiom verdicts. Axiom names: finer-than-order, bounded-sublattice,
/// weakening, interpolation, approximation.
struct AxiomReport {
  std::vector<AxiomCheck> checks;
  /// Finite frames only: whether the relation equals the order.
  std::optional<bool> collapse;
  /// Map reports only: whether ≪ is preserved.
  std::optional<bool> proper;

  bool ok() const noexcept;
  const AxiomCheck* first_failure() const noexcept;
};

/// Exhaustive check of every axiom. Throws MalformedRelation when the
/// column count does not match the frame.
AxiomReport validate_proximity(const FiniteFrame& frame, std::span<const ElemSet> below);
AxiomReport validate_proximity(const FiniteProxFrame& p);
/// Same decision as validate_proximity(...).ok() without building witnesses.
bool is_proximity(const FiniteFrame& frame, std::span<const ElemSet> below) noexcept;

/// Arbitrary relation on a chain frame, checked per element class.
using ChainRelation = std::function<bool(Code, Code)>;
AxiomReport validate_proximity(const ChainShape& shape, const ChainRelation& rel);
AxiomReport validate_proximity(const ProxChain& p);

/// Class representatives of a chain frame: the first offsets and a few far
/// offsets of every block, plus the last offsets of the finite block.
std::vector<Code> chain_class_points(const ChainShape& shape);

FiniteProxFrame order_proximity(std::shared_ptr<const FiniteFrame> frame, std::string name = {});
/// Componentwise relation on product(p.frame, q.frame).
FiniteProxFrame product_proximity(const FiniteProxFrame& p, const FiniteProxFrame& q);

struct CandidateRelation {
  std::vector<ElemSet> below;
  AxiomReport report;
};
/// {(a, b) : a* ∨ b = 1} with its axiom report.
CandidateRelation well_inside(const FiniteFrame& frame);

inline constexpr std::size_t kMaxCollapseElements = 12;

/// Outcome of enumerating every relation on a finite frame that is contained
/// in ≤, contains (0,0) and (1,1) and satisfies all axioms.
struct CollapseResult {
  std::uint64_t candidates = 0;  // relations examined after pruning
  std::uint64_t survivors = 0;   // relations satisfying every axiom
  std::optional<std::vector<ElemSet>> counterexample;  // first survivor other than ≤
};

/// Candidates are the relations closed under the weakening axiom, i.e. the
/// down-sets of the pair order (a,d) ≼ (b,c) iff a ≤ b and c ≤ d; any
/// proximity is one of them. Throws TooLarge above 12 elements.
CollapseResult search_proximities(const FiniteFrame& frame, Exec exec = Exec::parallel);

/// Runs search_proximities and reports whether ≤ is the only survivor.
LawReport certify_finite_collapse(const FiniteFrame& frame, const std::string& instance,
                                  Exec exec = Exec::parallel);

}  // namespace proxkit
