#include "proxkit/error.hpp"

namespace proxkit {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::MalformedRelation: return "MalformedRelation";
    case ErrorKind::InvalidReflexiveSet: return "InvalidReflexiveSet";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotDirected: return "NotDirected";
    case ErrorKind::UnsupportedRepresentation: return "UnsupportedRepresentation";
    case ErrorKind::NotStablyCompact: return "NotStablyCompact";
    case ErrorKind::MalformedMap: return "MalformedMap";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::UnknownInstance: return "UnknownInstance";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace proxkit
