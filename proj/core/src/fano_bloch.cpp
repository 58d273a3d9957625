#include "xgd/fano_bloch.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace xgd {

namespace detail {

namespace {
std::array<ComplexMatrix, 16> make_pauli2() {
    std::array<ComplexMatrix, 16> t;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a * 4 + b] = kron(pauli(a), pauli(b));
    return t;
}

std::array<ComplexMatrix, 64> make_pauli3() {
    std::array<ComplexMatrix, 64> t;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g)
                t[(a * 4 + b) * 4 + g] = kron(pauli(a), kron(pauli(b), pauli(g)));
    return t;
}
}  // namespace

const ComplexMatrix& pauli2(int a, int b) {
    static const std::array<ComplexMatrix, 16> table = make_pauli2();
    return table[a * 4 + b];
}

const ComplexMatrix& pauli3(int a, int b, int g) {
    static const std::array<ComplexMatrix, 64> table = make_pauli3();
    return table[(a * 4 + b) * 4 + g];
}

complexd block_coeff(const ComplexMatrix& m, int a, int b) {
    const ComplexMatrix& s = pauli2(a, b);
    complexd t(0.0, 0.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t += m(i, j) * s(j, i);
    return t;
}

namespace {
complexd trace_product(const ComplexMatrix& rho, const ComplexMatrix& s) {
    complexd t(0.0, 0.0);
    for (int i = 0; i < rho.dim(); ++i)
        for (int j = 0; j < rho.dim(); ++j) t += rho(i, j) * s(j, i);
    return t;
}

double real_coefficient(const ComplexMatrix& rho, const ComplexMatrix& s, const char* who) {
    const complexd t = trace_product(rho, s);
    if (std::abs(t.imag()) > 1e-10) {
        std::ostringstream os;
        os.precision(6);
        os << who << ": imaginary residue " << std::scientific << std::abs(t.imag())
           << " exceeds 1e-10";
        throw std::invalid_argument(os.str());
    }
    return t.real();
}
}  // namespace

}  // namespace detail

CorrelationMatrix2 bloch2(const DensityMatrix& rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("bloch2: expected a 4x4 state, got dimension " +
                                    std::to_string(rho.dim()));
    }
    return bloch2_block(rho.matrix());
}

CorrelationMatrix2 bloch2_block(const ComplexMatrix& m) {
    if (m.dim() != 4) {
        throw std::invalid_argument("bloch2_block: expected a 4x4 matrix, got dimension " +
                                    std::to_string(m.dim()));
    }
    CorrelationMatrix2 r;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            r.r[a][b] = detail::real_coefficient(m, detail::pauli2(a, b), "bloch2");
    return r;
}

CorrelationTensor3 bloch3(const DensityMatrix& rho) {
    if (rho.dim() != 8) {
        throw std::invalid_argument("bloch3: expected an 8x8 state, got dimension " +
                                    std::to_string(rho.dim()));
    }
    CorrelationTensor3 t;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g)
                t.t[a][b][g] =
                    detail::real_coefficient(rho.matrix(), detail::pauli3(a, b, g), "bloch3");
    return t;
}

ComplexMatrix inverse_bloch3(const CorrelationTensor3& t) {
    if (std::abs(t.t[0][0][0] - 1.0) > 1e-10) {
        throw std::invalid_argument("inverse_bloch3: T[0][0][0] must be 1, got " +
                                    std::to_string(t.t[0][0][0]));
    }
    ComplexMatrix rho(8);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g) {
                const double c = t.t[a][b][g];
                if (c == 0.0) continue;
                const ComplexMatrix& s = detail::pauli3(a, b, g);
                for (int i = 0; i < 8; ++i)
                    for (int j = 0; j < 8; ++j) rho(i, j) += (c / 8.0) * s(i, j);
            }
    return rho;
}

std::array<ComplexMatrix, 4> blocks(const DensityMatrix& rho) {
    if (rho.dim() != 8) {
        throw std::invalid_argument("blocks: expected an 8x8 state, got dimension " +
                                    std::to_string(rho.dim()));
    }
    std::array<ComplexMatrix, 4> out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            ComplexMatrix b(4);
            for (int a = 0; a < 4; ++a)
                for (int c = 0; c < 4; ++c) b(a, c) = rho(2 * a + i, 2 * c + j);
            out[2 * i + j] = b;
        }
    return out;
}

namespace {

constexpr int kXPairs[8][2] = {{0, 0}, {0, 3}, {3, 0}, {3, 3}, {1, 1}, {1, 2}, {2, 1}, {2, 2}};
constexpr int kAntiPairs[8][2] = {{0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 3}, {2, 3}, {3, 1}, {3, 2}};

// Residuals of the four recursion relations at one (a, b) pair; `which`
// selects the gamma components to include (bitmask over gamma = 0..3).
double relation_residual(const CorrelationTensor3& t, const ComplexMatrix& b00,
                         const ComplexMatrix& b01, const ComplexMatrix& b10,
                         const ComplexMatrix& b11, int a, int b, unsigned which) {
    using detail::block_coeff;
    const complexd r00 = block_coeff(b00, a, b);
    const complexd r01 = block_coeff(b01, a, b);
    const complexd r10 = block_coeff(b10, a, b);
    const complexd r11 = block_coeff(b11, a, b);
    double res = 0.0;
    if (which & 1u) res = std::max(res, std::abs(t.t[a][b][0] - (r00 + r11)));
    if (which & 8u) res = std::max(res, std::abs(t.t[a][b][3] - (r00 - r11)));
    if (which & 2u) res = std::max(res, std::abs(t.t[a][b][1] - (r01 + r10)));
    if (which & 4u)
        res = std::max(res, std::abs(t.t[a][b][2] - complexd(0.0, 1.0) * (r01 - r10)));
    return res;
}

}  // namespace

double recursion_check(const DensityMatrix& rho, XClass cls) {
    if (cls != XClass::Class1 && cls != XClass::Class2) {
        throw std::invalid_argument("recursion_check: class must be Class1 or Class2");
    }
    const CorrelationTensor3 t = bloch3(rho);
    const std::array<ComplexMatrix, 4> b = blocks(rho);
    double res = 0.0;
    if (cls == XClass::Class1) {
        // All four relations over the X pairs.
        for (const auto& p : kXPairs)
            res = std::max(res, relation_residual(t, b[0], b[1], b[2], b[3], p[0], p[1], 0xFu));
    } else {
        // gamma in {0, 3} over the X pairs, gamma in {1, 2} over the anti pairs.
        for (const auto& p : kXPairs)
            res = std::max(res, relation_residual(t, b[0], b[1], b[2], b[3], p[0], p[1], 0x9u));
        for (const auto& p : kAntiPairs)
            res = std::max(res, relation_residual(t, b[0], b[1], b[2], b[3], p[0], p[1], 0x6u));
    }
    return res;
}

namespace {
inline int count12(int a) { return (a == 1 || a == 2) ? 1 : 0; }
}  // namespace

bool class1_support(int a, int b, int g) {
    (void)g;
    return (count12(a) + count12(b)) % 2 == 0;
}

bool class2_support(int a, int b, int g) {
    return (count12(a) + count12(b) + count12(g)) % 2 == 0;
}

double off_support_max(const CorrelationTensor3& t, XClass cls) {
    if (cls != XClass::Class1 && cls != XClass::Class2) {
        throw std::invalid_argument("off_support_max: class must be Class1 or Class2");
    }
    double m = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g) {
                const bool in_support =
                    cls == XClass::Class1 ? class1_support(a, b, g) : class2_support(a, b, g);
                if (!in_support) m = std::max(m, std::abs(t.t[a][b][g]));
            }
    return m;
}

}  // namespace xgd
