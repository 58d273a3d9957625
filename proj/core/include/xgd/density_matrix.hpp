#pragma once

#include "xgd/complex_matrix.hpp"

namespace xgd {

/// A validated density matrix: Hermitian within 1e-10, unit trace within
/// 1e-10, positive semidefinite with minimum eigenvalue >= -1e-10, and of
/// dimension 2, 4 or 8. Immutable after construction.
class DensityMatrix {
public:
    /// Validates and wraps m. Throws std::invalid_argument naming the failed
    /// invariant (hermiticity / trace / psd) and its residual.
    static DensityMatrix validated(const ComplexMatrix& m);

    const ComplexMatrix& matrix() const { return m_; }
    int dim() const { return m_.dim(); }
    int qubits() const;

    complexd operator()(int r, int c) const { return m_(r, c); }

    /// Validation tolerances, shared by every constructor path.
    static constexpr double kHermTol = 1e-10;
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kPsdTol = 1e-10;

private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// Trace out one qubit (1-based index; qubit 1 is the slowest basis index) of
/// an 8x8 density matrix, yielding the 4x4 reduced state of the remaining two
/// qubits in their original order. Throws std::invalid_argument for dimensions
/// other than 8 or qubit indices outside 1..3.
DensityMatrix partial_trace(const DensityMatrix& rho, int traced_qubit);

}  // namespace xgd
