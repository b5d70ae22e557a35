#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace proxkit {

/// Outcome of checking one identity on one instance. A failing report
/// carries the element/ideal names that reproduce the failure.
struct LawReport {
  std::string law;
  std::string instance;
  bool pass = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> witness;
  std::string detail;
};

}  // namespace proxkit
