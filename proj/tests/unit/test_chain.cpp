#include <doctest.h>

#include <random>

#include "proxkit/chain.hpp"
#include "proxkit/error.hpp"

using namespace proxkit;

namespace {

const ProxChain p1 = chain_proximity(build_chain_frame(1), {1});
const ProxChain p2 = chain_proximity(build_chain_frame(2), {2});

// Random map on p1: block 0 goes either into block 0 (affine) or to the top.
ChainMap random_map(std::mt19937_64& rng) {
  AffineSeq b0;
  const std::size_t head = rng() % 4;
  for (std::size_t i = 0; i < head; ++i) b0.head.push_back(rng() % 5 == 0 ? lim(1) : Code{0, rng() % 6});
  b0.tail = rng() % 6 == 0 ? constant_tail(lim(1)) : Tail{0, rng() % 4, static_cast<std::int64_t>(rng() % 4)};
  AffineSeq b1{{}, constant_tail(rng() % 4 == 0 ? Code{0, rng() % 5} : lim(1))};
  return ChainMap(p1, p1, {b0, b1});
}

std::vector<Code> window() {
  std::vector<Code> out;
  for (std::uint64_t n = 0; n < 300; ++n) out.push_back({0, n});
  out.push_back(lim(1));
  return out;
}

}  // namespace

TEST_SUITE("chain") {
  TEST_CASE("chain proximity keeps the strict order and the reflexive diagonal") {
    CHECK(p2.rel(succ(0, 3), succ(0, 3)));
    CHECK(p2.rel(succ(1, 0), lim(2)));
    CHECK(!p2.rel(lim(1), lim(1)));
    CHECK(p2.rel(lim(1), lim(2)));
    CHECK(p2.rel(lim(2), lim(2)));
    CHECK(p2.shift(1) == 0);
    CHECK(p2.shift(2) == 1);
    CHECK(describe(p2) == "chain:k=2,R=[2]");
    CHECK_THROWS_AS(chain_proximity(build_chain_frame(2), {1}), Error);
    try {
      (void)chain_proximity(build_chain_frame(2), {3});
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidParameter);
    }
  }

  TEST_CASE("round ideal codes round-trip") {
    const ProxChain r = round_ideal_chain(p2);
    CHECK(r.shape.k == 2);
    CHECK(r.shape.m == 1);
    CHECK(r.reflexive_limits == 0);
    CHECK(decode(p2, encode(p2, below_lim(1))) == below_lim(1));
    CHECK(decode(p2, encode(p2, below_lim(2))) == below_lim(2));
    CHECK(decode(p2, encode(p2, prin(lim(2)))) == prin(lim(2)));
    for (std::uint64_t n = 0; n < 50; ++n) {
      for (std::uint32_t q = 0; q < 2; ++q) CHECK(decode(p2, encode(p2, prin(succ(q, n)))) == prin(succ(q, n)));
    }
    for (Code c : {Code{0, 0}, Code{0, 9}, Code{1, 0}, Code{1, 5}, Code{2, 0}, Code{2, 1}}) {
      CHECK(encode(p2, decode(p2, c)) == c);
    }
    // Lim(1) is not reflexive, so its principal ideal is not round.
    CHECK_THROWS_AS(encode(p2, prin(lim(1))), Error);
  }

  TEST_CASE("composition is exact") {
    std::mt19937_64 rng(11);
    const std::vector<Code> pts = window();
    for (int trial = 0; trial < 300; ++trial) {
      const ChainMap f = random_map(rng);
      const ChainMap g = random_map(rng);
      const ChainMap gf = compose(g, f);
      for (Code x : pts) CHECK(gf(x) == g(f(x)));
    }
    CHECK_THROWS_AS(compose(identity_map(p1), identity_map(p2)), Error);
  }

  TEST_CASE("first difference and first not-leq agree with a scan") {
    std::mt19937_64 rng(12);
    const std::vector<Code> pts = window();
    for (int trial = 0; trial < 500; ++trial) {
      const ChainMap f = random_map(rng);
      const ChainMap g = random_map(rng);
      std::optional<Code> diff, nleq;
      for (Code x : pts) {
        if (!diff && f(x) != g(x)) diff = x;
        if (!nleq && !(f(x) <= g(x))) nleq = x;
      }
      CHECK(first_difference(f, g) == diff);
      CHECK(first_not_leq(f, g) == nleq);
      CHECK((first_difference(f, g).has_value() == !(f == g)));
    }
  }

  TEST_CASE("preimage counts agree with a scan") {
    std::mt19937_64 rng(13);
    const std::vector<Code> pts = window();
    for (int trial = 0; trial < 300; ++trial) {
      const ChainMap f = random_map(rng);
      for (Code target : {Code{0, 0}, Code{0, 3}, Code{0, 7}, lim(1)}) {
        std::uint64_t count = 0;
        std::optional<Code> first;
        for (Code x : pts) {
          if (f(x) == target) {
            if (!first) first = x;
            ++count;
          }
        }
        const Preimage pre = preimage(f, target);
        CHECK(pre.count == std::min<std::uint64_t>(count, 2));
        CHECK(pre.first == first);
      }
    }
  }

  TEST_CASE("maps leaving the codomain are rejected") {
    AffineSeq b0{{}, Tail{1, 1, 0}};
    AffineSeq b1{{}, constant_tail(lim(1))};
    CHECK_THROWS_AS(ChainMap(p1, p1, {b0, b1}), Error);
    CHECK_THROWS_AS(ChainMap(p1, p1, {b1}), Error);
    AffineSeq negative{{}, Tail{0, 1, -1}};
    CHECK_THROWS_AS(ChainMap(p1, p1, {negative, b1}), Error);
  }

  TEST_CASE("normal form makes equal maps compare equal") {
    const ChainMap a(p1, p1, {AffineSeq{{{0, 0}, {0, 1}}, Tail{0, 1, 0}}, AffineSeq{{}, constant_tail(lim(1))}});
    CHECK(a == identity_map(p1));
    CHECK(a.blocks()[0].head.empty());
    const ChainMap b = identity_map(p1).with_value({0, 4}, {0, 4});
    CHECK(b == identity_map(p1));
  }
}
