#pragma once

#include <array>

#include "xgd/density_matrix.hpp"
#include "xgd/fano_bloch.hpp"
#include "xgd/xclass.hpp"

namespace xgd {

/// The real symmetric 3x3 matrix K = x x^t + T T^t over the measured qubit's
/// Pauli directions. block_structured marks |K13|, |K23| <= 1e-10, in which
/// case the eigenproblem splits into a 2x2 block plus K33.
struct KMatrix {
    std::array<std::array<double, 3>, 3> k{};
    bool block_structured = false;
};

/// Which eigenvalue attains the maximum: B1 for the larger in-plane root k1,
/// B3 for k3 (ties resolve to B3).
enum class Branch { B1, B3 };

/// How the K matrix (or the two-qubit spectrum) was produced.
enum class Method { Class1Closed, Class2Closed, Tensor, TwoQubit };

/// Discord value with the spectrum data behind it. For dim-8 splits
/// value = (k1 + k2 + k3 - kmax) / 8; for two-qubit states the fields hold
/// the lambda spectrum and value = (l1 + l2 + l3 - max(l1, l3)) / 4.
struct DiscordResult {
    double value = 0.0;
    double k1 = 0.0, k2 = 0.0, k3 = 0.0;
    std::array<double, 3> e_max{0.0, 0.0, 1.0};
    Branch branch = Branch::B3;
    Method method = Method::Tensor;
};

/// Closest zero-discord (classical-quantum) state. chi is Hermitian with unit
/// trace; positivity is reported, never silently repaired.
struct ClassicalState {
    ComplexMatrix chi;
    bool psd_ok = false;
    double distance_sq = 0.0;
};

/// Eigendata of a KMatrix: k1 >= k2 from the in-plane block (or the two
/// largest eigenvalues when K is not block-structured), k3 = K33 (or the
/// smallest eigenvalue), plus the unit eigenvector of the maximum.
struct KEigen {
    double k1 = 0.0, k2 = 0.0, k3 = 0.0;
    std::array<double, 3> e_max{0.0, 0.0, 1.0};
    Branch branch = Branch::B3;
};

/// Normative route, valid for ANY 8x8 state: K_ij = x_i x_j +
/// sum_{(b,g) != (0,0)} T[i][b][g] T[j][b][g] with x = (T100, T200, T300)
/// and tensors from bloch3. The split is fixed at 1|23.
KMatrix kmatrix_tensor(const DensityMatrix& rho);

/// Closed-form diagonal entries in the qubit-3 block entries of a class-1
/// state (K12 comes from the tensor route; K13 = K23 = 0 structurally).
/// Throws ClassMismatchError unless classify(rho) is Class1 or Both.
KMatrix kmatrix_class1(const DensityMatrix& rho);

/// Closed-form diagonal entries for a class-2 state, same conventions.
/// Throws ClassMismatchError unless classify(rho) is Class2 or Both.
KMatrix kmatrix_class2(const DensityMatrix& rho);

/// Alternative closed form of K12 through the phase angles of the block
/// entries (products of moduli and sines of summed arguments; a vanishing
/// modulus zeroes its term). Retained for cross-validation against the
/// tensor-route K12. cls must be Class1 or Class2.
double kmatrix_k12_phase_form(const DensityMatrix& rho, XClass cls);

/// Spectrum and maximal eigenvector of K. Block-structured matrices use the
/// closed quadratic roots of the in-plane block and the conventions
///   e = (cos t, -sin t, 0), tan t = (K11 - k1) / K12   (branch B1)
///   e = (0, 0, 1)                                      (branch B3)
/// with t = 0 when K12 = 0 and K11 >= K22, t = pi/2 when K12 = 0 and
/// K22 > K11, and ties |k1 - k3| <= 1e-10 resolving to B3. General matrices
/// fall back to the Jacobi eigensolver with k1 >= k2 >= k3 and branch B1.
KEigen k_eigen(const KMatrix& k);

/// Geometric discord of the 1|23 split, value = (k2 + min(k1, k3)) / 8.
/// The K route is chosen by class: class-1 / class-2 closed forms when the
/// class permits, tensor route otherwise.
DiscordResult discord3(const DensityMatrix& rho);

/// Two-qubit geometric discord. X states use the closed spectrum
///   l1 = 4 (|r14| + |r23|)^2,  l2 = 4 (|r14| - |r23|)^2,
///   l3 = 2 [(r11 - r33)^2 + (r22 - r44)^2]
/// and value = (l2 + min(l1, l3)) / 4; other 4x4 states use the two-qubit
/// tensor-route K with the Jacobi eigensolver.
DiscordResult discord2(const DensityMatrix& rho);

/// Closest classical state for the 1|23 split: the Fano projection that
/// keeps the qubit-1 components along e_max,
///   C[0][b][g] = T[0][b][g],  C[i][0][0] = e_i (e . x),
///   C[i][b][g] = e_i sum_j e_j T[j][b][g]  for (b, g) != (0, 0),
/// which at e = (0,0,1) is the branch-B3 state and at in-plane e the
/// branch-B1 state. Reports the HS distance and whether chi is positive.
ClassicalState closest_classical3(const DensityMatrix& rho);

/// Two-qubit analogue of closest_classical3.
ClassicalState closest_classical2(const DensityMatrix& rho);

}  // namespace xgd
