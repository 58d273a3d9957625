#include "xgd/density_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xgd {

namespace {
std::string fmt_residual(double r) {
    std::ostringstream os;
    os.precision(6);
    os << std::scientific << r;
    return os.str();
}
}  // namespace

DensityMatrix DensityMatrix::validated(const ComplexMatrix& m) {
    const int d = m.dim();
    if (d != 2 && d != 4 && d != 8) {
        throw std::invalid_argument("density matrix validation: dimension " + std::to_string(d) +
                                    " is not one of 2, 4, 8");
    }
    const double herm = hermiticity_residual(m);
    if (herm > kHermTol) {
        throw std::invalid_argument("density matrix validation: hermiticity residual " +
                                    fmt_residual(herm) + " exceeds 1e-10");
    }
    const double tr_res = std::abs(trace(m) - complexd(1.0, 0.0));
    if (tr_res > kTraceTol) {
        throw std::invalid_argument("density matrix validation: trace residual " +
                                    fmt_residual(tr_res) + " exceeds 1e-10");
    }
    const double min_eig = hermitian_eigenvalues(m).front();
    if (min_eig < -kPsdTol) {
        throw std::invalid_argument("density matrix validation: psd residual " +
                                    fmt_residual(-min_eig) +
                                    " exceeds 1e-10 (minimum eigenvalue " + fmt_residual(min_eig) +
                                    ")");
    }
    return DensityMatrix(m);
}

int DensityMatrix::qubits() const {
    switch (m_.dim()) {
        case 2: return 1;
        case 4: return 2;
        default: return 3;
    }
}

DensityMatrix partial_trace(const DensityMatrix& rho, int traced_qubit) {
    if (rho.dim() != 8) {
        throw std::invalid_argument("partial_trace: expected an 8x8 state, got dimension " +
                                    std::to_string(rho.dim()));
    }
    if (traced_qubit < 1 || traced_qubit > 3) {
        throw std::invalid_argument("partial_trace: qubit index must be in 1..3, got " +
                                    std::to_string(traced_qubit));
    }
    // Qubit k occupies bit (3 - k): qubit 1 is the slowest basis index.
    const int traced_bit = 3 - traced_qubit;
    int kept_bits[2];
    int n = 0;
    for (int b = 2; b >= 0; --b)
        if (b != traced_bit) kept_bits[n++] = b;  // slow kept bit first

    ComplexMatrix r(4);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            complexd sum(0.0, 0.0);
            for (int m = 0; m < 2; ++m) {
                const int row = (((a >> 1) & 1) << kept_bits[0]) | ((a & 1) << kept_bits[1]) |
                                (m << traced_bit);
                const int col = (((b >> 1) & 1) << kept_bits[0]) | ((b & 1) << kept_bits[1]) |
                                (m << traced_bit);
                sum += rho(row, col);
            }
            r(a, b) = sum;
        }
    }
    return DensityMatrix::validated(r);
}

}  // namespace xgd
