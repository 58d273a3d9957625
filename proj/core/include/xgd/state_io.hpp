#pragma once

#include <string>

#include "xgd/density_matrix.hpp"
#include "xgd/errors.hpp"

namespace xgd {

/// Load a state file: a JSON document with fields
///   dim    : 2, 4 or 8
///   matrix : dim x dim array of [re, im] pairs
///   label  : optional string
/// Throws ParseError (with line/column for malformed JSON) on structural
/// problems and std::invalid_argument when the matrix fails density-matrix
/// validation (the message names the invariant and its residual).
DensityMatrix load_state(const std::string& path);

/// Parse a state document from text (same rules as load_state).
DensityMatrix parse_state(const std::string& text);

/// Serialize a Hermitian matrix as a state document. Numbers round-trip
/// exactly (shortest representation that parses back to the same double).
std::string format_state(const ComplexMatrix& m, const std::string& label = "");

/// format_state straight to a file; throws ParseError when unwritable.
void save_state(const std::string& path, const ComplexMatrix& m,
                const std::string& label = "");

/// Fixed-significant-digit decimal rendering ("%.12g" for digits = 12),
/// locale-independent.
std::string format_significant(double v, int digits = 12);

}  // namespace xgd
