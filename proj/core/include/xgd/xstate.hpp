#pragma once

#include <array>
#include <cstdint>

#include "xgd/density_matrix.hpp"
#include "xgd/xclass.hpp"

namespace xgd {

/// Parity operator of a class: sigma3 (x) sigma3 (x) sigma0 for Class1,
/// sigma3 (x) sigma3 (x) sigma3 for Class2, sigma3 (x) sigma3 for TwoQubitX.
ComplexMatrix parity_operator(XClass cls);

/// Classify by commutator norms against the parity operators (tolerance
/// 1e-10). Dim-8 inputs map to Class1 / Class2 / Both / NonX; dim-4 inputs to
/// TwoQubitX / NonX. Throws std::invalid_argument for other dimensions.
XClass classify(const DensityMatrix& rho);

/// Residual max|PQ - QP| against the parity operator of cls.
double commutator_residual(const DensityMatrix& rho, XClass cls);

/// Parity twirl (rho + P rho P) / 2 onto the commutant of the target class's
/// parity operator. target must be Class1 or Class2 (dim-8 input) or
/// TwoQubitX (dim-4 input). Preserves Hermiticity, trace and positivity.
DensityMatrix twirl(const DensityMatrix& rho, XClass target);

/// (p/8) I + (1-p) |GHZ><GHZ| with |GHZ> = (|000> + |111>)/sqrt(2), p in [0,1].
DensityMatrix ghz_mixed(double p);

/// (p/8) I + (1-p) |W><W| with |W> = (|100> + |010> + |001>)/sqrt(3), p in [0,1].
DensityMatrix w_mixed(double p);

/// (1/8)(I + c1 s1s1s1 + c2 s2s2s2 + c3 s3s3s3); throws std::invalid_argument
/// when the parameters yield a non-positive matrix.
DensityMatrix bell_type(double c1, double c2, double c3);

/// Random density matrix rho = G G^dagger / Tr(G G^dagger) with G a matrix of
/// standard complex Gaussians drawn from the given seed.
DensityMatrix random_density(int dim, std::uint64_t seed);

/// Random state of the requested class: parity twirl of random_density.
/// target in {Class1, Class2} (dim 8) or TwoQubitX (dim 4).
DensityMatrix random_x_state(XClass target, std::uint64_t seed);

/// Random pure single-qubit state |phi><phi| from a seeded Gaussian pair.
DensityMatrix random_pure_qubit(std::uint64_t seed);

/// Relabel qubits of an 8x8 state: new position k (1-based) carries the
/// former qubit perm[k-1]. perm must be a permutation of {1, 2, 3}.
DensityMatrix permute_qubits(const DensityMatrix& rho, const std::array<int, 3>& perm);

}  // namespace xgd
