// Deterministic fixture states shared across the test binaries.
//
// det_matrix builds a Hermitian PSD matrix from small integer residues, so the
// fixtures are bit-for-bit reproducible without touching any RNG.  The anchor
// states are parity twirls of those fixtures; reference values for them were
// computed with an independent arbitrary-layout implementation and are
// asserted verbatim in the tests.

#pragma once

#include "xgd/density_matrix.hpp"
#include "xgd/xstate.hpp"

namespace xgdtest {

// g[j][k] = ((j+1) + (k+1)^2 + variant) mod 7  +  i * (((j+1)(k+1) + 2*variant) mod 5)
// m = g g^dagger / tr(g g^dagger)
inline xgd::DensityMatrix det_matrix(int dim, int variant) {
    xgd::ComplexMatrix g(dim);
    for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < dim; ++k) {
            const int re = ((j + 1) + (k + 1) * (k + 1) + variant) % 7;
            const int im = ((j + 1) * (k + 1) + 2 * variant) % 5;
            g(j, k) = xgd::complexd(re, im);
        }
    }
    xgd::ComplexMatrix m = g * xgd::adjoint(g);
    const double tr = xgd::trace(m).real();
    m = m * xgd::complexd(1.0 / tr, 0.0);
    return xgd::DensityMatrix::validated(m);
}

// Class-1 anchor: twirl of det_matrix(8, 0) under the qubits-1-2 parity.
inline xgd::DensityMatrix anchor_class1() {
    return xgd::twirl(det_matrix(8, 0), xgd::XClass::Class1);
}

// Class-2 anchor: twirl of det_matrix(8, 1) under the full parity.
inline xgd::DensityMatrix anchor_class2() {
    return xgd::twirl(det_matrix(8, 1), xgd::XClass::Class2);
}

// Two-qubit anchor: twirl of det_matrix(4, 2) under sigma3 x sigma3.
inline xgd::DensityMatrix anchor_twoqubit() {
    return xgd::twirl(det_matrix(4, 2), xgd::XClass::TwoQubitX);
}

}  // namespace xgdtest
