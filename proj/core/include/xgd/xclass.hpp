#pragma once

namespace xgd {

/// Structural class of a density matrix with respect to the parity operators.
///
///   TwoQubitX : 4x4, commutes with sigma3 (x) sigma3
///   Class1    : 8x8, commutes with sigma3 (x) sigma3 (x) sigma0
///   Class2    : 8x8, commutes with sigma3 (x) sigma3 (x) sigma3
///   Both      : 8x8, commutes with both parity operators
///   NonX      : commutes with neither
enum class XClass { TwoQubitX, Class1, Class2, Both, NonX };

/// Human-readable tag ("TwoQubitX", "Class1", ...).
const char* to_string(XClass cls);

}  // namespace xgd
