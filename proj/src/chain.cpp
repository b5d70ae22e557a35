#include "proxkit/chain.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "proxkit/error.hpp"

namespace proxkit {

ChainShape build_chain_frame(std::uint32_t k) {
  if (k < 1 || k > kMaxChainBlocks) {
    throw Error(ErrorKind::InvalidParameter,
                "chain frame needs 1 <= k <= 63, got k=" + std::to_string(k));
  }
  return ChainShape{k, 0};
}

std::string element_name(Code c) {
  if (c.block == 0) return "Succ(0," + std::to_string(c.offset) + ")";
  if (c.offset == 0) return "Lim(" + std::to_string(c.block) + ")";
  return "Succ(" + std::to_string(c.block) + "," + std::to_string(c.offset - 1) + ")";
}

namespace {

std::uint64_t parse_number(std::string_view text, std::string_view whole) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::ParseError, "bad chain element '" + std::string(whole) + "'",
                {std::string(whole)});
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Code parse_element(std::string_view text) {
  const auto body = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (text.size() < prefix.size() + 1 || text.substr(0, prefix.size()) != prefix || text.back() != ')') {
      return std::nullopt;
    }
    return text.substr(prefix.size(), text.size() - prefix.size() - 1);
  };
  if (auto args = body("Lim(")) {
    const auto q = parse_number(trim(*args), text);
    if (q < 1 || q > kMaxChainBlocks) {
      throw Error(ErrorKind::ParseError, "limit index out of range in '" + std::string(text) + "'");
    }
    return lim(static_cast<std::uint32_t>(q));
  }
  if (auto args = body("Succ(")) {
    const auto comma = args->find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorKind::ParseError, "bad chain element '" + std::string(text) + "'");
    }
    const auto i = parse_number(trim(args->substr(0, comma)), text);
    const auto n = parse_number(trim(args->substr(comma + 1)), text);
    if (i > kMaxChainBlocks) throw Error(ErrorKind::ParseError, "block index out of range");
    return succ(static_cast<std::uint32_t>(i), n);
  }
  throw Error(ErrorKind::ParseError, "bad chain element '" + std::string(text) + "'",
              {std::string(text)});
}

// ---- AffineSeq -------------------------------------------------------------

bool AffineSeq::well_formed() const noexcept {
  return static_cast<std::int64_t>(tail.slope * head.size()) + tail.intercept >= 0;
}

bool AffineSeq::is_monotone() const noexcept {
  for (std::size_t i = 1; i < head.size(); ++i) {
    if (head[i] < head[i - 1]) return false;
  }
  return head.empty() || !(tail.at(head.size()) < head.back());
}

Code AffineSeq::sup() const noexcept {
  if (tail.slope >= 1) return lim(tail.block + 1);
  Code best = tail.at(0);
  for (const Code& c : head) best = join(best, c);
  return best;
}

void AffineSeq::normalize() {
  while (!head.empty() && head.back() == tail.at(head.size() - 1)) head.pop_back();
}

// ---- proximities -----------------------------------------------------------

std::vector<std::uint32_t> ProxChain::reflexive_limit_list() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 1; q <= shape.k; ++q) {
    if ((reflexive_limits >> q) & 1u) out.push_back(q);
  }
  return out;
}

ProxChain chain_proximity(const ChainShape& shape, const std::vector<std::uint32_t>& reflexive) {
  ProxChain p{shape, 0};
  for (std::uint32_t q : reflexive) {
    if (q < 1 || q > shape.k) {
      throw Error(ErrorKind::InvalidParameter,
                  "reflexive limit index " + std::to_string(q) + " outside 1.." + std::to_string(shape.k));
    }
    p.reflexive_limits |= std::uint64_t{1} << q;
  }
  if (!p.reflexive(shape.top())) {
    throw Error(ErrorKind::InvalidReflexiveSet,
                "top " + element_name(shape.top()) + " must be reflexive (1 ≺ 1)",
                {element_name(shape.top())});
  }
  return p;
}

ProxChain chain_order_proximity(const ChainShape& shape) {
  ProxChain p{shape, 0};
  for (std::uint32_t q = 1; q <= shape.k; ++q) p.reflexive_limits |= std::uint64_t{1} << q;
  return p;
}

ProxChain chain_way_below_relation(const ChainShape& shape) { return ProxChain{shape, 0}; }

std::string describe(const ProxChain& p) {
  std::ostringstream os;
  os << "chain:k=" << p.shape.k;
  if (p.shape.m != 0) os << ",m=" << p.shape.m;
  os << ",R=[";
  const auto list = p.reflexive_limit_list();
  for (std::size_t i = 0; i < list.size(); ++i) os << (i ? "," : "") << list[i];
  os << "]";
  return os.str();
}

// ---- ideals ----------------------------------------------------------------

std::string ideal_name(const ChainIdeal& ideal) {
  if (ideal.kind == ChainIdeal::Kind::prin) return "Prin(" + element_name(ideal.at) + ")";
  return "BelowLim(" + std::to_string(ideal.at.block) + ")";
}

bool subideal(const ChainIdeal& a, const ChainIdeal& b) noexcept {
  using K = ChainIdeal::Kind;
  if (a.kind == K::prin) return b.kind == K::prin ? a.at <= b.at : a.at < b.at;
  return a.at <= b.at;  // everything below a limit; a.at itself need not be in b
}

ProxChain round_ideal_chain(const ProxChain& p) {
  return ProxChain{ChainShape{p.shape.k, p.shape.m + p.shift(p.shape.k)}, 0};
}

ProxChain max_proximity_chain(const ProxChain& p) {
  return ProxChain{ChainShape{p.shape.k, p.shape.m + p.shift(p.shape.k)}, p.reflexive_limits};
}

Code encode(const ProxChain& p, const ChainIdeal& ideal) {
  const Code x = ideal.at;
  if (ideal.kind == ChainIdeal::Kind::below_lim) {
    if (!is_limit(x) || x.block > p.shape.k) {
      throw Error(ErrorKind::UnsupportedRepresentation, "BelowLim needs a limit of the frame");
    }
    return x;
  }
  if (!p.shape.contains(x) || !p.reflexive(x)) {
    throw Error(ErrorKind::UnsupportedRepresentation,
                ideal_name(ideal) + " is not a round ideal (generator not reflexive)",
                {element_name(x)});
  }
  if (x.block == 0) return x;
  const std::uint64_t s = p.shift(x.block);
  if (x.offset == 0) return {x.block, 1};
  return {x.block, x.offset + s};
}

ChainIdeal decode(const ProxChain& p, Code code) {
  if (!round_ideal_chain(p).shape.contains(code)) {
    throw Error(ErrorKind::UnsupportedRepresentation, "code outside the round-ideal frame");
  }
  if (code.block == 0) return prin(code);
  if (code.offset == 0) return below_lim(code.block);
  const std::uint64_t s = p.shift(code.block);
  if (s == 1 && code.offset == 1) return prin(lim(code.block));
  return prin(Code{code.block, code.offset - s});
}

// ---- ChainMap --------------------------------------------------------------

ChainMap::ChainMap(ProxChain dom, ProxChain cod, std::vector<AffineSeq> blocks)
    : dom_(dom), cod_(cod), blocks_(std::move(blocks)) {
  if (blocks_.size() != dom_.shape.k + 1) {
    throw Error(ErrorKind::MalformedMap, "expected " + std::to_string(dom_.shape.k + 1) +
                                             " blocks, got " + std::to_string(blocks_.size()));
  }
  for (std::uint32_t q = 0; q <= dom_.shape.k; ++q) {
    const AffineSeq& b = blocks_[q];
    if (!b.well_formed()) {
      throw Error(ErrorKind::MalformedMap, "tail of block " + std::to_string(q) + " goes negative");
    }
    for (std::size_t r = 0; r < b.head.size(); ++r) {
      if (!cod_.shape.contains(b.head[r])) {
        throw Error(ErrorKind::MalformedMap, "value " + element_name(b.head[r]) + " outside codomain");
      }
    }
    if (dom_.shape.finite_block(q)) {
      for (std::uint64_t r = b.head.size(); r <= dom_.shape.m; ++r) {
        if (!cod_.shape.contains(b.at(r))) {
          throw Error(ErrorKind::MalformedMap, "value " + element_name(b.at(r)) + " outside codomain");
        }
      }
    } else if (b.tail.slope >= 1 ? b.tail.block >= cod_.shape.k
                                 : !cod_.shape.contains(b.tail.at(0))) {
      throw Error(ErrorKind::MalformedMap, "tail of block " + std::to_string(q) + " leaves the codomain");
    }
  }
  normalize();
}

void ChainMap::normalize() {
  for (std::uint32_t q = 0; q <= dom_.shape.k; ++q) {
    AffineSeq& b = blocks_[q];
    if (dom_.shape.finite_block(q)) {
      const std::uint64_t m = dom_.shape.m;
      std::vector<Code> values;
      values.reserve(m + 1);
      for (std::uint64_t r = 0; r <= m; ++r) values.push_back(b.at(r));
      b.tail = constant_tail(values.back());
      values.pop_back();
      b.head = std::move(values);
    }
    b.normalize();
  }
}

Code ChainMap::block_sup(std::uint32_t q) const noexcept {
  if (dom_.shape.finite_block(q)) return blocks_[q].at(dom_.shape.m);
  return blocks_[q].sup();
}

bool ChainMap::block_sup_attained(std::uint32_t q) const noexcept {
  return dom_.shape.finite_block(q) || blocks_[q].sup_attained();
}

ChainMap ChainMap::with_value(Code x, Code value) const {
  std::vector<AffineSeq> blocks = blocks_;
  AffineSeq& b = blocks[x.block];
  while (b.head.size() <= x.offset) b.head.push_back(b.tail.at(b.head.size()));
  b.head[x.offset] = value;
  return ChainMap(dom_, cod_, std::move(blocks));
}

ChainMap ChainMap::retag(ProxChain dom, ProxChain cod) const {
  if (dom.shape != dom_.shape || cod.shape != cod_.shape) {
    throw Error(ErrorKind::NotComposable, "retag needs identical carriers");
  }
  return ChainMap(dom, cod, blocks_);
}

ChainMap identity_map(const ProxChain& p) {
  std::vector<AffineSeq> blocks;
  for (std::uint32_t q = 0; q <= p.shape.k; ++q) blocks.push_back(AffineSeq{{}, Tail{q, 1, 0}});
  return ChainMap(p, p, std::move(blocks));
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorKind::NotComposable,
                "codomain " + describe(f.cod()) + " differs from domain " + describe(g.dom()));
  }
  std::vector<AffineSeq> blocks;
  const ChainShape& shape = f.dom().shape;
  for (std::uint32_t q = 0; q <= shape.k; ++q) {
    const AffineSeq& fb = f.blocks()[q];
    AffineSeq out;
    if (shape.finite_block(q)) {
      for (std::uint64_t r = 0; r <= shape.m; ++r) out.head.push_back(g(fb.at(r)));
      out.tail = constant_tail(out.head.back());
      out.head.pop_back();
    } else if (fb.tail.slope == 0) {
      for (const Code& c : fb.head) out.head.push_back(g(c));
      out.tail = constant_tail(g(fb.tail.at(0)));
    } else {
      const AffineSeq& gb = g.blocks()[fb.tail.block];
      // first r at which f's tail lands past g's head
      const auto need = static_cast<std::int64_t>(gb.head.size()) - fb.tail.intercept;
      std::uint64_t start = fb.head.size();
      if (need > 0) {
        const auto slope = static_cast<std::int64_t>(fb.tail.slope);
        start = std::max<std::uint64_t>(start, static_cast<std::uint64_t>((need + slope - 1) / slope));
      }
      for (std::uint64_t r = 0; r < start; ++r) out.head.push_back(g(fb.at(r)));
      out.tail = Tail{gb.tail.block, gb.tail.slope * fb.tail.slope,
                      static_cast<std::int64_t>(gb.tail.slope) * fb.tail.intercept + gb.tail.intercept};
    }
    blocks.push_back(std::move(out));
  }
  return ChainMap(f.dom(), g.cod(), std::move(blocks));
}

namespace {

template <class Cmp>
std::optional<Code> first_failure(const ChainMap& f, const ChainMap& g, Cmp ok) {
  if (!(f.dom().shape == g.dom().shape) || !(f.cod().shape == g.cod().shape)) {
    throw Error(ErrorKind::NotComposable, "maps have different carriers");
  }
  const ChainShape& shape = f.dom().shape;
  for (std::uint32_t q = 0; q <= shape.k; ++q) {
    const AffineSeq& a = f.blocks()[q];
    const AffineSeq& b = g.blocks()[q];
    if (shape.finite_block(q)) {
      for (std::uint64_t r = 0; r <= shape.m; ++r) {
        if (!ok(a.at(r), b.at(r))) return Code{q, r};
      }
      continue;
    }
    const std::uint64_t n = std::max(a.head.size(), b.head.size());
    for (std::uint64_t r = 0; r < n; ++r) {
      if (!ok(a.at(r), b.at(r))) return Code{q, r};
    }
    // Both affine from n on: two affine pieces that differ disagree at n or
    // n + 1; a comparison that holds at n keeps holding unless the slopes
    // cross, in which case the crossing index is computed directly.
    if (!ok(a.at(n), b.at(n))) return Code{q, n};
    if (!ok(a.at(n + 1), b.at(n + 1))) return Code{q, n + 1};
    if (a.tail.block == b.tail.block && a.tail.slope > b.tail.slope) {
      const auto ds = static_cast<std::int64_t>(a.tail.slope - b.tail.slope);
      const auto di = b.tail.intercept - a.tail.intercept;
      const auto cross = static_cast<std::uint64_t>(std::max<std::int64_t>(di / ds + 1, 0));
      const std::uint64_t r = std::max(cross, n);
      if (!ok(a.at(r), b.at(r))) return Code{q, r};
      if (!ok(a.at(r + 1), b.at(r + 1))) return Code{q, r + 1};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Code> first_difference(const ChainMap& f, const ChainMap& g) {
  return first_failure(f, g, [](Code x, Code y) { return x == y; });
}

std::optional<Code> first_not_leq(const ChainMap& f, const ChainMap& g) {
  return first_failure(f, g, [](Code x, Code y) { return x <= y; });
}

Preimage preimage(const ChainMap& f, Code target) {
  Preimage out;
  const auto record = [&](Code x) {
    if (out.count == 0) out.first = x;
    else if (out.count == 1) out.second = x;
    out.count = std::min<std::uint64_t>(out.count + 1, 2);
  };
  const ChainShape& shape = f.dom().shape;
  for (std::uint32_t q = 0; q <= shape.k && out.count < 2; ++q) {
    const AffineSeq& b = f.blocks()[q];
    for (std::uint64_t r = 0; r < b.head.size() && out.count < 2; ++r) {
      if (b.head[r] == target) record({q, r});
    }
    const std::uint64_t h = b.head.size();
    if (shape.finite_block(q)) {
      for (std::uint64_t r = h; r <= shape.m && out.count < 2; ++r) {
        if (b.at(r) == target) record({q, r});
      }
    } else if (b.tail.block == target.block) {
      const auto off = static_cast<std::int64_t>(target.offset) - b.tail.intercept;
      if (b.tail.slope == 0) {
        if (off == 0) {
          record({q, h});
          record({q, h + 1});
        }
      } else if (off >= 0 && off % static_cast<std::int64_t>(b.tail.slope) == 0) {
        const auto r = static_cast<std::uint64_t>(off) / b.tail.slope;
        if (r >= h) record({q, r});
      }
    }
  }
  return out;
}

}  // namespace proxkit
