#include <limits>

#include "proxkit/finite_frame.hpp"

namespace proxkit {
namespace {

bool distributes(std::size_t n, std::span<const Elem> meet, std::span<const Elem> join, Elem a,
                 Elem b, Elem c) {
  const Elem lhs = meet[a * n + join[b * n + c]];
  const Elem rhs = join[meet[a * n + b] * n + meet[a * n + c]];
  return lhs == rhs;
}

}  // namespace

std::optional<Triple> find_distributivity_failure(std::size_t n, std::span<const Elem> meet,
                                                  std::span<const Elem> join, Exec exec) {
  const long total = static_cast<long>(n * n * n);
  if (exec == Exec::serial) {
    for (long t = 0; t < total; ++t) {
      const Elem a = static_cast<Elem>(t / (n * n));
      const Elem b = static_cast<Elem>((t / n) % n);
      const Elem c = static_cast<Elem>(t % n);
      if (!distributes(n, meet, join, a, b, c)) return Triple{a, b, c};
    }
    return std::nullopt;
  }

  // Smallest failing linear index, so the witness matches the serial scan.
  long first = std::numeric_limits<long>::max();
#pragma omp parallel for schedule(static) reduction(min : first)
  for (long t = 0; t < total; ++t) {
    const Elem a = static_cast<Elem>(t / (n * n));
    const Elem b = static_cast<Elem>((t / n) % n);
    const Elem c = static_cast<Elem>(t % n);
    if (t < first && !distributes(n, meet, join, a, b, c)) first = t;
  }
  if (first == std::numeric_limits<long>::max()) return std::nullopt;
  return Triple{static_cast<Elem>(first / (n * n)), static_cast<Elem>((first / n) % n),
                static_cast<Elem>(first % n)};
}

}  // namespace proxkit
