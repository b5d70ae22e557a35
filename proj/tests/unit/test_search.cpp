#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "proxkit/error.hpp"
#include "proxkit/search.hpp"

using namespace proxkit;

TEST_SUITE("search") {
  TEST_CASE("generated frames are the distributive lattices up to size 6") {
    const auto frames = generate_frames(6);
    std::map<std::size_t, std::size_t> by_size;
    for (const FiniteProxFrame& f : frames) ++by_size[f.size()];
    // Number of distributive lattices with n elements, n = 2..6.
    CHECK(by_size == std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 5}});
    for (std::size_t i = 0; i < frames.size(); ++i) {
      for (std::size_t j = i + 1; j < frames.size(); ++j) {
        CHECK(!oracle::isomorphic(*frames[i].frame, *frames[j].frame));
      }
    }
  }

  TEST_CASE("larger sizes add chains") {
    const auto frames = generate_frames(8);
    std::size_t chains = 0;
    for (const FiniteProxFrame& f : frames) chains += f.name.rfind("chain", 0) == 0 ? 1 : 0;
    CHECK(chains == 2);
    for (const FiniteProxFrame& f : frames) CHECK(f.size() <= 8);
  }

  TEST_CASE("searches find nothing and respect limits") {
    const SearchResult c = run_search("collapse", 6, Exec::serial);
    CHECK(c.ok());
    CHECK(c.frames == 12);
    CHECK(c.certificate.size() == 12);
    CHECK(run_search("collapse", 6, Exec::parallel).checked == c.checked);
    CHECK(run_search("theta-rho", 4).ok());
    const SearchResult s = run_search("star-vs-compose", 4);
    CHECK(s.ok());
    CHECK(s.note.find("no finite witness") == 0);
    CHECK(to_json(s)["verdict"] == "pass");
    CHECK_THROWS_AS(run_search("collapse", 13), Error);
    CHECK_THROWS_AS(run_search("theta-rho", 6), Error);
    CHECK_THROWS_AS(run_search("other", 3), Error);
  }
}
