#include <algorithm>
#include <numeric>

#include "proxkit/error.hpp"
#include "proxkit/proximity.hpp"

namespace proxkit {
namespace {

using Mask = unsigned __int128;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

// Down-sets of the pair order, enumerated in a fixed linear extension. A
// pair may be included only once everything below it is included, so every
// leaf is a down-set and each down-set is reached exactly once.
struct PairSearch {
  const FiniteFrame& frame;
  std::vector<std::pair<Elem, Elem>> pairs;  // (a, b) with a ≤ b, in linear-extension order
  std::vector<Mask> strictly_below;          // in the pair order
  std::size_t forced_low = 0;                // index of (0,0)
  std::size_t forced_high = 0;               // index of (1,1)

  explicit PairSearch(const FiniteFrame& f) : frame(f) {
    const auto n = static_cast<Elem>(f.size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (f.leq(a, b)) pairs.emplace_back(a, b);
      }
    }
    // Canonical indices extend ≤, so (a, -b) ascending extends the pair order.
    std::sort(pairs.begin(), pairs.end(), [](auto x, auto y) {
      return x.first != y.first ? x.first < y.first : x.second > y.second;
    });
    strictly_below.assign(pairs.size(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        const auto [a, d] = pairs[j];
        const auto [b, c] = pairs[i];
        if (i != j && f.leq(a, b) && f.leq(c, d)) strictly_below[i] |= bit(j);
      }
      if (pairs[i] == std::pair{f.bot(), f.bot()}) forced_low = i;
      if (pairs[i] == std::pair{f.top(), f.top()}) forced_high = i;
    }
  }

  bool forced(std::size_t i) const { return i == forced_low || i == forced_high; }
  bool may_include(std::size_t i, Mask chosen) const { return (strictly_below[i] & ~chosen) == 0; }

  std::vector<ElemSet> columns(Mask chosen) const {
    std::vector<ElemSet> below(frame.size(), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (chosen & bit(i)) below[pairs[i].second] |= singleton(pairs[i].first);
    }
    return below;
  }

  void leaf(Mask chosen, CollapseResult& out) const {
    ++out.candidates;
    const auto below = columns(chosen);
    if (!is_proximity(frame, below)) return;
    ++out.survivors;
    bool is_order = true;
    for (Elem a = 0; a < frame.size(); ++a) is_order = is_order && below[a] == frame.down(a);
    if (!is_order && !out.counterexample) out.counterexample = below;
  }

  // Include branch first; this fixes the order in which survivors are met.
  void run(std::size_t i, Mask chosen, CollapseResult& out) const {
    if (i == pairs.size()) {
      leaf(chosen, out);
      return;
    }
    if (may_include(i, chosen)) run(i + 1, chosen | bit(i), out);
    if (!forced(i)) run(i + 1, chosen, out);
  }

  void prefixes(std::size_t i, std::size_t depth, Mask chosen, std::vector<Mask>& out) const {
    if (i == depth) {
      out.push_back(chosen);
      return;
    }
    if (may_include(i, chosen)) prefixes(i + 1, depth, chosen | bit(i), out);
    if (!forced(i)) prefixes(i + 1, depth, chosen, out);
  }
};

}  // namespace

CollapseResult search_proximities(const FiniteFrame& frame, Exec exec) {
  if (frame.size() > kMaxCollapseElements) {
    throw Error(ErrorKind::TooLarge, "relation search is limited to frames of <= 12 elements, got " +
                                         std::to_string(frame.size()));
  }
  const PairSearch search(frame);
  CollapseResult total;
  if (exec == Exec::serial) {
    search.run(0, 0, total);
    return total;
  }

  const std::size_t depth = std::min<std::size_t>(search.pairs.size(), 14);
  std::vector<Mask> starts;
  search.prefixes(0, depth, 0, starts);
  std::vector<CollapseResult> parts(starts.size());
  const long count = static_cast<long>(starts.size());
#pragma omp parallel for schedule(dynamic)
  for (long s = 0; s < count; ++s) search.run(depth, starts[s], parts[s]);

  // Prefixes were generated in search order, so the first counterexample
  // in prefix order is the one the serial search meets first.
  for (auto& part : parts) {
    total.candidates += part.candidates;
    total.survivors += part.survivors;
    if (!total.counterexample && part.counterexample) total.counterexample = std::move(part.counterexample);
  }
  return total;
}

}  // namespace proxkit
