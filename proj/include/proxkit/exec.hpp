#pragma once

namespace proxkit {

/// Execution policy for the enumeration kernels. `serial` is the reference
/// path the tests compare the OpenMP path against.
enum class Exec { serial, parallel };

}  // namespace proxkit
