#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "proxkit/exec.hpp"
#include "proxkit/io.hpp"
#include "proxkit/proximity.hpp"

namespace proxkit {

/// Distributive lattices with 2..max_size elements, as order proximity
/// frames: the down-set frames of posets on at most 5 points, one per
/// isomorphism type, then chains longer than 6. Complete for sizes up to 6,
/// since a lattice of size s has at most s - 1 join-irreducibles.
std::vector<FiniteProxFrame> generate_frames(std::size_t max_size);

inline constexpr std::size_t kMaxSearchRelations = 12;  // collapse
inline constexpr std::size_t kMaxSearchMorphisms = 5;   // theta-rho, star-vs-compose

struct SearchFinding {
  std::string frame;
  std::vector<std::string> witness;
  std::string detail;
};

struct SearchResult {
  std::string law;
  std::size_t max_size = 0;
  std::uint64_t frames = 0;
  std::uint64_t checked = 0;  // relations or maps examined
  std::vector<SearchFinding> counterexamples;
  std::vector<std::string> certificate;  // one line per frame for collapse
  std::string note;
  bool ok() const noexcept { return counterexamples.empty(); }
};

/// law is collapse, theta-rho or star-vs-compose. Throws TooLarge above the
/// size limits and InvalidParameter for other laws.
SearchResult run_search(const std::string& law, std::size_t max_size, Exec exec = Exec::parallel);

Json to_json(const SearchResult& result);

}  // namespace proxkit
