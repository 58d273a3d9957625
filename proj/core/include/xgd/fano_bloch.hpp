#pragma once

#include <array>

#include "xgd/complex_matrix.hpp"
#include "xgd/density_matrix.hpp"
#include "xgd/xclass.hpp"

namespace xgd {

/// Two-qubit Fano-Bloch coefficients R[alpha][beta] = Tr(rho sigma_a (x) sigma_b).
/// For a valid density matrix R[0][0] = 1 and every entry lies in [-1, 1];
/// when extracted from a (possibly non-unit-trace) Hermitian block, R[0][0]
/// relaxes to the block trace.
struct CorrelationMatrix2 {
    std::array<std::array<double, 4>, 4> r{};
};

/// Three-qubit Fano-Bloch coefficients T[alpha][beta][gamma].
struct CorrelationTensor3 {
    std::array<std::array<std::array<double, 4>, 4>, 4> t{};
};

/// Coefficients of a valid two-qubit state. Throws std::invalid_argument when
/// any trace carries an imaginary residue above 1e-10.
CorrelationMatrix2 bloch2(const DensityMatrix& rho);

/// Coefficients of a Hermitian 4x4 block that need not have unit trace.
CorrelationMatrix2 bloch2_block(const ComplexMatrix& m);

/// Coefficients of a valid three-qubit state (64 real entries).
CorrelationTensor3 bloch3(const DensityMatrix& rho);

/// rho = (1/8) sum_{abg} T[a][b][g] sigma_a (x) sigma_b (x) sigma_g.
/// Requires |T[0][0][0] - 1| <= 1e-10. The result is Hermitian with unit
/// trace but may fail positivity; callers validate when a state is required.
ComplexMatrix inverse_bloch3(const CorrelationTensor3& t);

/// Qubit-3 block decomposition: rho = sum_{ij} block(i,j) (x) |i><j| with
/// |i>, |j> on qubit 3 (the fastest basis index), i.e.
/// block(i,j)(a,b) = rho(2a+i, 2b+j). Returned in order 00, 01, 10, 11.
std::array<ComplexMatrix, 4> blocks(const DensityMatrix& rho);

/// Largest violation of the tripartite-to-bipartite recursion relations
///   T[a][b][0] = R00 + R11,   T[a][b][3] = R00 - R11,
///   T[a][b][1] = R01 + R10,   T[a][b][2] = i (R01 - R10)
/// over the admissible (a, b) pairs of the given class, where R^{ij} are the
/// Fano coefficients of the qubit-3 blocks. cls must be Class1 or Class2.
double recursion_check(const DensityMatrix& rho, XClass cls);

/// Whether T[a][b][g] may be nonzero for a class-1 state: (a, b) must hold an
/// even number of indices from {1, 2} (any g); 32 admissible triplets.
bool class1_support(int a, int b, int g);

/// Whether T[a][b][g] may be nonzero for a class-2 state: the whole triplet
/// must hold an even number of indices from {1, 2}; 32 admissible triplets.
bool class2_support(int a, int b, int g);

/// Largest |T[a][b][g]| outside the class support (0 for an exact class state).
double off_support_max(const CorrelationTensor3& t, XClass cls);

namespace detail {
/// Cached Pauli products sigma_a (x) sigma_b and sigma_a (x) sigma_b (x) sigma_g.
const ComplexMatrix& pauli2(int a, int b);
const ComplexMatrix& pauli3(int a, int b, int g);
/// Complex Fano coefficient Tr(m sigma_a (x) sigma_b) of an arbitrary 4x4
/// matrix (off-diagonal blocks are not Hermitian, so the value is complex).
complexd block_coeff(const ComplexMatrix& m, int a, int b);
}  // namespace detail

}  // namespace xgd
