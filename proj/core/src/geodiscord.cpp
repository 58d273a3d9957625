#include "xgd/geodiscord.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xgd/errors.hpp"
#include "xgd/xstate.hpp"

namespace xgd {

namespace {

constexpr double kBlockTol = 1e-10;  // |K13|, |K23| threshold
constexpr double kTieTol = 1e-10;    // |k1 - k3| branch tie

double sq(double v) { return v * v; }

// K12 over the tensor route: x1 x2 + sum_{(b,g) != (0,0)} T1bg T2bg.
double tensor_k12(const CorrelationTensor3& t) {
    double s = t.t[1][0][0] * t.t[2][0][0];
    for (int b = 0; b < 4; ++b)
        for (int g = 0; g < 4; ++g) {
            if (b == 0 && g == 0) continue;
            s += t.t[1][b][g] * t.t[2][b][g];
        }
    return s;
}

double clamp_tiny_negative(double v) {
    return (v < 0.0 && v > -1e-12) ? 0.0 : v;
}

}  // namespace

KMatrix kmatrix_tensor(const DensityMatrix& rho) {
    const CorrelationTensor3 t = bloch3(rho);
    const double x[3] = {t.t[1][0][0], t.t[2][0][0], t.t[3][0][0]};
    KMatrix k;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            double s = x[i] * x[j];
            for (int b = 0; b < 4; ++b)
                for (int g = 0; g < 4; ++g) {
                    if (b == 0 && g == 0) continue;
                    s += t.t[i + 1][b][g] * t.t[j + 1][b][g];
                }
            k.k[i][j] = s;
            k.k[j][i] = s;
        }
    k.block_structured =
        std::abs(k.k[0][2]) <= kBlockTol && std::abs(k.k[1][2]) <= kBlockTol;
    return k;
}

namespace {

void require_class(const DensityMatrix& rho, XClass wanted, const char* who) {
    const XClass cls = classify(rho);
    if (cls == wanted || cls == XClass::Both) return;
    throw ClassMismatchError(std::string(who) + ": state classifies as " + to_string(cls) +
                             ", not " + to_string(wanted) + " (commutator residual " +
                             std::to_string(commutator_residual(rho, wanted)) + ")");
}

// Shared diagonal pieces: both classes carry the same b00/b11 diagonal sums in
// K33 and the same b00/b11 corner sums in K11/K22.
struct DiagonalParts {
    double corner_plus;   // |b00_23 + b00_41|^2 + |b11_23 + b11_41|^2
    double corner_minus;  // |b00_23 - b00_41|^2 + |b11_23 - b11_41|^2
    double k33_diag;      // (b00_11-b00_33)^2 + (b00_22-b00_44)^2 + b11 analogues
};

DiagonalParts diagonal_parts(const ComplexMatrix& b00, const ComplexMatrix& b11) {
    DiagonalParts d;
    d.corner_plus = std::norm(b00(1, 2) + b00(3, 0)) + std::norm(b11(1, 2) + b11(3, 0));
    d.corner_minus = std::norm(b00(1, 2) - b00(3, 0)) + std::norm(b11(1, 2) - b11(3, 0));
    d.k33_diag = sq((b00(0, 0) - b00(2, 2)).real()) + sq((b00(1, 1) - b00(3, 3)).real()) +
                 sq((b11(0, 0) - b11(2, 2)).real()) + sq((b11(1, 1) - b11(3, 3)).real());
    return d;
}

}  // namespace

KMatrix kmatrix_class1(const DensityMatrix& rho) {
    require_class(rho, XClass::Class1, "kmatrix_class1");
    const std::array<ComplexMatrix, 4> b = blocks(rho);
    const ComplexMatrix &b00 = b[0], &b01 = b[1], &b11 = b[3];
    const DiagonalParts d = diagonal_parts(b00, b11);

    KMatrix k;
    k.k[0][0] = 8.0 * (d.corner_plus + std::norm(b01(0, 3) + b01(2, 1)) +
                       std::norm(b01(3, 0) + b01(1, 2)));
    k.k[1][1] = 8.0 * (d.corner_minus + std::norm(b01(0, 3) - b01(2, 1)) +
                       std::norm(b01(1, 2) - b01(3, 0)));
    k.k[2][2] = 4.0 * d.k33_diag +
                8.0 * (std::norm(b01(0, 0) - b01(2, 2)) + std::norm(b01(1, 1) - b01(3, 3)));
    const double k12 = tensor_k12(bloch3(rho));
    k.k[0][1] = k12;
    k.k[1][0] = k12;
    k.k[0][2] = k.k[2][0] = 0.0;
    k.k[1][2] = k.k[2][1] = 0.0;
    k.block_structured = true;
    return k;
}

KMatrix kmatrix_class2(const DensityMatrix& rho) {
    require_class(rho, XClass::Class2, "kmatrix_class2");
    const std::array<ComplexMatrix, 4> b = blocks(rho);
    const ComplexMatrix &b00 = b[0], &b01 = b[1], &b11 = b[3];
    const DiagonalParts d = diagonal_parts(b00, b11);

    KMatrix k;
    k.k[0][0] = 8.0 * (d.corner_plus + std::norm(b01(0, 2) + b01(2, 0)) +
                       std::norm(b01(1, 3) + b01(3, 1)));
    k.k[1][1] = 8.0 * (d.corner_minus + std::norm(b01(0, 2) - b01(2, 0)) +
                       std::norm(b01(1, 3) - b01(3, 1)));
    k.k[2][2] = 4.0 * d.k33_diag +
                8.0 * (std::norm(b01(0, 1) - b01(2, 3)) + std::norm(b01(1, 0) - b01(3, 2)));
    const double k12 = tensor_k12(bloch3(rho));
    k.k[0][1] = k12;
    k.k[1][0] = k12;
    k.k[0][2] = k.k[2][0] = 0.0;
    k.k[1][2] = k.k[2][1] = 0.0;
    k.block_structured = true;
    return k;
}

double kmatrix_k12_phase_form(const DensityMatrix& rho, XClass cls) {
    if (cls != XClass::Class1 && cls != XClass::Class2) {
        throw std::invalid_argument("kmatrix_k12_phase_form: class must be Class1 or Class2");
    }
    const std::array<ComplexMatrix, 4> b = blocks(rho);
    const ComplexMatrix &b00 = b[0], &b01 = b[1], &b11 = b[3];
    // |a||b| sin(arg a + arg b) for the Hermitian blocks; the off-diagonal
    // block pairs carry a difference of arguments. std::arg(0) = 0 together
    // with the vanishing modulus zeroes any term with a zero entry.
    auto sum_term = [](complexd u, complexd v) {
        return std::abs(u) * std::abs(v) * std::sin(std::arg(u) + std::arg(v));
    };
    auto diff_term = [](complexd u, complexd v) {
        return std::abs(u) * std::abs(v) * std::sin(std::arg(v) - std::arg(u));
    };
    double s = sum_term(b00(0, 3), b00(1, 2)) + sum_term(b11(0, 3), b11(1, 2));
    if (cls == XClass::Class1) {
        s += diff_term(b01(2, 1), b01(0, 3)) + diff_term(b01(3, 0), b01(1, 2));
    } else {
        s += diff_term(b01(2, 0), b01(0, 2)) + diff_term(b01(3, 1), b01(1, 3));
    }
    return -16.0 * s;
}

namespace {

// In-plane eigen data of the 2x2 block [[K11, K12], [K12, K22]].
struct InPlane {
    double k1, k2;
    double e1, e2;  // unit eigenvector of k1 as (cos t, -sin t)
};

InPlane in_plane_eigen(double k11, double k22, double k12) {
    InPlane r;
    const double half = 0.5 * (k11 + k22);
    const double disc = std::sqrt(sq(0.5 * (k11 - k22)) + sq(k12));
    r.k1 = half + disc;
    r.k2 = half - disc;
    double theta;
    if (k12 == 0.0) {
        theta = (k11 >= k22) ? 0.0 : M_PI / 2.0;
    } else {
        theta = std::atan((k11 - r.k1) / k12);
    }
    r.e1 = std::cos(theta);
    r.e2 = -std::sin(theta);
    return r;
}

}  // namespace

KEigen k_eigen(const KMatrix& k) {
    KEigen r;
    if (k.block_structured) {
        const InPlane ip = in_plane_eigen(k.k[0][0], k.k[1][1], k.k[0][1]);
        r.k1 = ip.k1;
        r.k2 = ip.k2;
        r.k3 = k.k[2][2];
        if (r.k3 >= r.k1 - kTieTol) {
            r.branch = Branch::B3;
            r.e_max = {0.0, 0.0, 1.0};
        } else {
            r.branch = Branch::B1;
            r.e_max = {ip.e1, ip.e2, 0.0};
        }
        return r;
    }
    ComplexMatrix m(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = k.k[i][j];
    const EigenSystem es = hermitian_eigensystem(m);  // ascending
    r.k1 = es.values[2];
    r.k2 = es.values[1];
    r.k3 = es.values[0];
    r.branch = Branch::B1;
    double n = 0.0;
    for (int i = 0; i < 3; ++i) {
        r.e_max[i] = es.vectors(i, 2).real();
        n += sq(r.e_max[i]);
    }
    n = std::sqrt(n);
    int lead = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(r.e_max[i]) > std::abs(r.e_max[lead])) lead = i;
    const double sign = r.e_max[lead] >= 0.0 ? 1.0 : -1.0;
    for (double& c : r.e_max) c *= sign / n;
    return r;
}

DiscordResult discord3(const DensityMatrix& rho) {
    const XClass cls = classify(rho);
    KMatrix k;
    Method method;
    if (cls == XClass::Class1 || cls == XClass::Both) {
        k = kmatrix_class1(rho);
        method = Method::Class1Closed;
    } else if (cls == XClass::Class2) {
        k = kmatrix_class2(rho);
        method = Method::Class2Closed;
    } else {
        k = kmatrix_tensor(rho);
        method = Method::Tensor;
    }
    const KEigen ke = k_eigen(k);
    DiscordResult d;
    d.k1 = ke.k1;
    d.k2 = ke.k2;
    d.k3 = ke.k3;
    d.e_max = ke.e_max;
    d.branch = ke.branch;
    d.method = method;
    const double kmax = ke.branch == Branch::B3 ? ke.k3 : ke.k1;
    d.value = clamp_tiny_negative((ke.k1 + ke.k2 + ke.k3 - kmax) / 8.0);
    return d;
}

namespace {

// Two-qubit tensor-route K: x = (T10, T20, T30), K = x x^t + T T^t over b != 0.
KMatrix kmatrix_tensor2(const CorrelationMatrix2& t) {
    const double x[3] = {t.r[1][0], t.r[2][0], t.r[3][0]};
    KMatrix k;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            double s = x[i] * x[j];
            for (int b = 1; b < 4; ++b) s += t.r[i + 1][b] * t.r[j + 1][b];
            k.k[i][j] = s;
            k.k[j][i] = s;
        }
    k.block_structured =
        std::abs(k.k[0][2]) <= kBlockTol && std::abs(k.k[1][2]) <= kBlockTol;
    return k;
}

}  // namespace

DiscordResult discord2(const DensityMatrix& rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("discord2: expected a 4x4 state, got dimension " +
                                    std::to_string(rho.dim()));
    }
    const XClass cls = classify(rho);
    DiscordResult d;
    if (cls == XClass::TwoQubitX) {
        const double a = std::abs(rho(0, 3));
        const double b = std::abs(rho(1, 2));
        d.k1 = 4.0 * sq(a + b);
        d.k2 = 4.0 * sq(a - b);
        d.k3 = 2.0 * (sq((rho(0, 0) - rho(2, 2)).real()) + sq((rho(1, 1) - rho(3, 3)).real()));
        d.method = Method::TwoQubit;
        if (d.k3 >= d.k1 - kTieTol) {
            d.branch = Branch::B3;
            d.e_max = {0.0, 0.0, 1.0};
        } else {
            d.branch = Branch::B1;
            const KMatrix k = kmatrix_tensor2(bloch2(rho));
            const InPlane ip = in_plane_eigen(k.k[0][0], k.k[1][1], k.k[0][1]);
            d.e_max = {ip.e1, ip.e2, 0.0};
        }
        d.value = clamp_tiny_negative((d.k2 + std::min(d.k1, d.k3)) / 4.0);
        return d;
    }
    const KMatrix k = kmatrix_tensor2(bloch2(rho));
    const KEigen ke = k_eigen(k);
    d.k1 = ke.k1;
    d.k2 = ke.k2;
    d.k3 = ke.k3;
    d.e_max = ke.e_max;
    d.branch = ke.branch;
    d.method = Method::Tensor;
    const double kmax = ke.branch == Branch::B3 ? ke.k3 : ke.k1;
    d.value = clamp_tiny_negative((ke.k1 + ke.k2 + ke.k3 - kmax) / 4.0);
    return d;
}

namespace {

ClassicalState finish_classical(const DensityMatrix& rho, const ComplexMatrix& chi) {
    ClassicalState c;
    c.chi = chi;
    c.distance_sq = hs_norm_sq(rho.matrix() - chi);
    c.psd_ok = hermitian_eigenvalues(chi).front() >= -DensityMatrix::kPsdTol;
    return c;
}

}  // namespace

ClassicalState closest_classical3(const DensityMatrix& rho) {
    const DiscordResult d = discord3(rho);
    const CorrelationTensor3 t = bloch3(rho);
    const std::array<double, 3>& e = d.e_max;
    const double ex = e[0] * t.t[1][0][0] + e[1] * t.t[2][0][0] + e[2] * t.t[3][0][0];

    CorrelationTensor3 c;
    c.t[0] = t.t[0];  // C[0][b][g] = T[0][b][g], including C000 = 1
    for (int b = 0; b < 4; ++b)
        for (int g = 0; g < 4; ++g) {
            double w;
            if (b == 0 && g == 0) {
                w = ex;
            } else {
                w = e[0] * t.t[1][b][g] + e[1] * t.t[2][b][g] + e[2] * t.t[3][b][g];
            }
            for (int i = 0; i < 3; ++i) c.t[i + 1][b][g] = e[i] * w;
        }
    return finish_classical(rho, inverse_bloch3(c));
}

ClassicalState closest_classical2(const DensityMatrix& rho) {
    const DiscordResult d = discord2(rho);
    const CorrelationMatrix2 t = bloch2(rho);
    const std::array<double, 3>& e = d.e_max;
    const double ex = e[0] * t.r[1][0] + e[1] * t.r[2][0] + e[2] * t.r[3][0];

    CorrelationMatrix2 c;
    c.r[0] = t.r[0];
    for (int b = 0; b < 4; ++b) {
        const double w = b == 0 ? ex
                                : e[0] * t.r[1][b] + e[1] * t.r[2][b] + e[2] * t.r[3][b];
        for (int i = 0; i < 3; ++i) c.r[i + 1][b] = e[i] * w;
    }
    ComplexMatrix chi(4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const double coeff = c.r[a][b];
            if (coeff == 0.0) continue;
            const ComplexMatrix& s = detail::pauli2(a, b);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) chi(i, j) += (coeff / 4.0) * s(i, j);
        }
    return finish_classical(rho, chi);
}

}  // namespace xgd
