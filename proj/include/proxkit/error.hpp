#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace proxkit {

enum class ErrorKind {
  NotAPoset,
  NotALattice,
  NotDistributive,
  NoBounds,
  InvalidParameter,
  NotATopology,
  MalformedRelation,
  InvalidReflexiveSet,
  TooLarge,
  NotDirected,
  UnsupportedRepresentation,
  NotStablyCompact,
  MalformedMap,
  NotComposable,
  UnknownInstance,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure the library reports. `witness` carries element ids that
/// reproduce the failure (a cycle pair, a non-distributive triple, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<std::string> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

}  // namespace proxkit
