#pragma once

#include <complex>
#include <vector>

namespace xgd {

using complexd = std::complex<double>;

/// Dense row-major complex matrix for the small dimensions used throughout
/// this library (qubit registers up to dim 8; tensor products up to dim 64).
class ComplexMatrix {
public:
    /// Zero-dimensional placeholder; assign before use.
    ComplexMatrix() : dim_(0) {}

    /// Zero-filled dim x dim matrix. Throws std::invalid_argument if dim < 1.
    explicit ComplexMatrix(int dim);

    /// dim x dim identity.
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    complexd& operator()(int r, int c) { return e_[static_cast<size_t>(r) * dim_ + c]; }
    const complexd& operator()(int r, int c) const { return e_[static_cast<size_t>(r) * dim_ + c]; }

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;  ///< matrix product
    ComplexMatrix operator*(complexd s) const;              ///< scalar product

private:
    int dim_;
    std::vector<complexd> e_;
};

inline ComplexMatrix operator*(complexd s, const ComplexMatrix& m) { return m * s; }

/// Pauli basis: pauli(0) = identity, pauli(1..3) = sigma_x, sigma_y, sigma_z.
/// Throws std::invalid_argument when alpha is outside 0..3.
ComplexMatrix pauli(int alpha);

/// Tensor product with the first factor as the slow index, i.e. basis order
/// |q1 q2 q3>. Rejects results of dimension > 64.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

complexd trace(const ComplexMatrix& a);

/// Squared Hilbert-Schmidt norm Tr(a^dagger a) = sum of squared entry moduli.
double hs_norm_sq(const ComplexMatrix& a);

/// Largest entrywise modulus.
double max_abs(const ComplexMatrix& a);

/// Largest entrywise modulus of a - a^dagger (0 for exactly Hermitian input).
double hermiticity_residual(const ComplexMatrix& a);

/// Eigenvalues of a Hermitian matrix, ascending, computed by cyclic complex
/// Jacobi rotations (off-diagonal tolerance 1e-13 relative to the Frobenius
/// norm, at most 100 sweeps). Throws std::invalid_argument when the input's
/// hermiticity residual exceeds 1e-10.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Eigenvalues (ascending) together with a unitary whose columns are the
/// corresponding eigenvectors.
struct EigenSystem {
    std::vector<double> values;
    ComplexMatrix vectors;  ///< column k is the eigenvector of values[k]
};

EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

}  // namespace xgd
