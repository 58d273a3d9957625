#include "xgd/xstate.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "xgd/fano_bloch.hpp"

namespace xgd {

const char* to_string(XClass cls) {
    switch (cls) {
        case XClass::TwoQubitX: return "TwoQubitX";
        case XClass::Class1: return "Class1";
        case XClass::Class2: return "Class2";
        case XClass::Both: return "Both";
        case XClass::NonX: return "NonX";
    }
    return "?";
}

ComplexMatrix parity_operator(XClass cls) {
    switch (cls) {
        case XClass::Class1: return kron(pauli(3), kron(pauli(3), pauli(0)));
        case XClass::Class2: return kron(pauli(3), kron(pauli(3), pauli(3)));
        case XClass::TwoQubitX: return kron(pauli(3), pauli(3));
        default:
            throw std::invalid_argument(
                "parity_operator: class must be Class1, Class2 or TwoQubitX");
    }
}

namespace {
double comm_residual(const ComplexMatrix& a, const ComplexMatrix& p) {
    return max_abs(a * p - p * a);
}
constexpr double kClassTol = 1e-10;
}  // namespace

double commutator_residual(const DensityMatrix& rho, XClass cls) {
    const ComplexMatrix p = parity_operator(cls);
    if (p.dim() != rho.dim()) {
        throw std::invalid_argument("commutator_residual: state dimension " +
                                    std::to_string(rho.dim()) + " does not match the " +
                                    to_string(cls) + " parity operator");
    }
    return comm_residual(rho.matrix(), p);
}

XClass classify(const DensityMatrix& rho) {
    if (rho.dim() == 4) {
        return commutator_residual(rho, XClass::TwoQubitX) <= kClassTol ? XClass::TwoQubitX
                                                                        : XClass::NonX;
    }
    if (rho.dim() == 8) {
        const bool c1 = commutator_residual(rho, XClass::Class1) <= kClassTol;
        const bool c2 = commutator_residual(rho, XClass::Class2) <= kClassTol;
        if (c1 && c2) return XClass::Both;
        if (c1) return XClass::Class1;
        if (c2) return XClass::Class2;
        return XClass::NonX;
    }
    throw std::invalid_argument("classify: expected dimension 4 or 8, got " +
                                std::to_string(rho.dim()));
}

DensityMatrix twirl(const DensityMatrix& rho, XClass target) {
    const ComplexMatrix p = parity_operator(target);
    if (p.dim() != rho.dim()) {
        throw std::invalid_argument("twirl: state dimension " + std::to_string(rho.dim()) +
                                    " does not match the " + to_string(target) +
                                    " parity operator");
    }
    const ComplexMatrix t = (rho.matrix() + p * rho.matrix() * p) * complexd(0.5, 0.0);
    return DensityMatrix::validated(t);
}

namespace {
void require_unit_interval(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(who) + ": mixing weight p must lie in [0, 1], got " +
                                    std::to_string(p));
    }
}
}  // namespace

DensityMatrix ghz_mixed(double p) {
    require_unit_interval(p, "ghz_mixed");
    ComplexMatrix m(8);
    for (int i = 0; i < 8; ++i) m(i, i) = p / 8.0;
    m(0, 0) += (1.0 - p) / 2.0;
    m(7, 7) += (1.0 - p) / 2.0;
    m(0, 7) = (1.0 - p) / 2.0;
    m(7, 0) = (1.0 - p) / 2.0;
    return DensityMatrix::validated(m);
}

DensityMatrix w_mixed(double p) {
    require_unit_interval(p, "w_mixed");
    ComplexMatrix m(8);
    for (int i = 0; i < 8; ++i) m(i, i) = p / 8.0;
    const int support[3] = {4, 2, 1};  // |100>, |010>, |001>
    for (int a : support)
        for (int b : support) m(a, b) += (1.0 - p) / 3.0;
    return DensityMatrix::validated(m);
}

DensityMatrix bell_type(double c1, double c2, double c3) {
    ComplexMatrix m = ComplexMatrix::identity(8) * complexd(1.0 / 8.0, 0.0);
    const double c[3] = {c1, c2, c3};
    for (int i = 1; i <= 3; ++i) {
        if (c[i - 1] == 0.0) continue;
        const ComplexMatrix& s = detail::pauli3(i, i, i);
        for (int r = 0; r < 8; ++r)
            for (int q = 0; q < 8; ++q) m(r, q) += (c[i - 1] / 8.0) * s(r, q);
    }
    const double min_eig = hermitian_eigenvalues(m).front();
    if (min_eig < -DensityMatrix::kPsdTol) {
        std::ostringstream os;
        os.precision(6);
        os << "bell_type: parameters (" << c1 << ", " << c2 << ", " << c3
           << ") fail positivity (minimum eigenvalue " << std::scientific << min_eig << ")";
        throw std::invalid_argument(os.str());
    }
    return DensityMatrix::validated(m);
}

DensityMatrix random_density(int dim, std::uint64_t seed) {
    if (dim != 2 && dim != 4 && dim != 8) {
        throw std::invalid_argument("random_density: dimension must be 2, 4 or 8, got " +
                                    std::to_string(dim));
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = complexd(gauss(rng), gauss(rng));
    ComplexMatrix m = g * adjoint(g);
    const double tr = trace(m).real();
    m = m * complexd(1.0 / tr, 0.0);
    return DensityMatrix::validated(m);
}

DensityMatrix random_x_state(XClass target, std::uint64_t seed) {
    switch (target) {
        case XClass::Class1:
        case XClass::Class2: return twirl(random_density(8, seed), target);
        case XClass::TwoQubitX: return twirl(random_density(4, seed), target);
        default:
            throw std::invalid_argument(
                "random_x_state: target must be Class1, Class2 or TwoQubitX");
    }
}

DensityMatrix random_pure_qubit(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    complexd a(gauss(rng), gauss(rng));
    complexd b(gauss(rng), gauss(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    ComplexMatrix m(2);
    m(0, 0) = std::norm(a);
    m(0, 1) = a * std::conj(b);
    m(1, 0) = b * std::conj(a);
    m(1, 1) = std::norm(b);
    return DensityMatrix::validated(m);
}

DensityMatrix permute_qubits(const DensityMatrix& rho, const std::array<int, 3>& perm) {
    if (rho.dim() != 8) {
        throw std::invalid_argument("permute_qubits: expected an 8x8 state, got dimension " +
                                    std::to_string(rho.dim()));
    }
    bool seen[4] = {false, false, false, false};
    for (int q : perm) {
        if (q < 1 || q > 3 || seen[q]) {
            throw std::invalid_argument(
                "permute_qubits: permutation must rearrange {1, 2, 3}");
        }
        seen[q] = true;
    }
    // New position k (bit 3-k) carries former qubit perm[k-1] (bit 3-perm[k-1]).
    auto old_index = [&](int n) {
        int o = 0;
        for (int k = 1; k <= 3; ++k) {
            const int bit = (n >> (3 - k)) & 1;
            o |= bit << (3 - perm[k - 1]);
        }
        return o;
    };
    ComplexMatrix r(8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r(i, j) = rho(old_index(i), old_index(j));
    return DensityMatrix::validated(r);
}

}  // namespace xgd
