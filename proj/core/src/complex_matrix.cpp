#include "xgd/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace xgd {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim < 1) {
        throw std::invalid_argument("ComplexMatrix: dimension must be positive, got " +
                                    std::to_string(dim));
    }
    e_.assign(static_cast<size_t>(dim) * dim, complexd(0.0, 0.0));
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

namespace {
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(op) + ": dimension mismatch " +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
}
}  // namespace

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    require_same_dim(*this, o, "ComplexMatrix::operator+");
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(i, j) + o(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    require_same_dim(*this, o, "ComplexMatrix::operator-");
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(i, j) - o(i, j);
    return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    require_same_dim(*this, o, "ComplexMatrix::operator*");
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const complexd aik = (*this)(i, k);
            if (aik == complexd(0.0, 0.0)) continue;
            for (int j = 0; j < dim_; ++j) r(i, j) += aik * o(k, j);
        }
    }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(complexd s) const {
    ComplexMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r(i, j) = (*this)(i, j) * s;
    return r;
}

ComplexMatrix pauli(int alpha) {
    if (alpha < 0 || alpha > 3) {
        throw std::invalid_argument("pauli: index must be in 0..3, got " + std::to_string(alpha));
    }
    ComplexMatrix m(2);
    switch (alpha) {
        case 0: m(0, 0) = 1.0; m(1, 1) = 1.0; break;
        case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
        case 2: m(0, 1) = complexd(0.0, -1.0); m(1, 0) = complexd(0.0, 1.0); break;
        case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    }
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim(), db = b.dim();
    if (da * db > 64) {
        throw std::invalid_argument("kron: result dimension " + std::to_string(da * db) +
                                    " exceeds the supported maximum of 64");
    }
    ComplexMatrix r(da * db);
    for (int i1 = 0; i1 < da; ++i1)
        for (int j1 = 0; j1 < da; ++j1) {
            const complexd aij = a(i1, j1);
            if (aij == complexd(0.0, 0.0)) continue;
            for (int i2 = 0; i2 < db; ++i2)
                for (int j2 = 0; j2 < db; ++j2)
                    r(i1 * db + i2, j1 * db + j2) = aij * b(i2, j2);
        }
    return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix r(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

complexd trace(const ComplexMatrix& a) {
    complexd t(0.0, 0.0);
    for (int i = 0; i < a.dim(); ++i) t += a(i, i);
    return t;
}

double hs_norm_sq(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
    return s;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
}

double hermiticity_residual(const ComplexMatrix& a) {
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
    return m;
}

namespace {

// One cyclic complex Jacobi pass + accumulation. The rotation for pivot
// (p, q) is R = D G restricted to the (p, q) plane, where D = diag(1, e^{-i f})
// turns a_pq into its modulus and G is the real rotation zeroing it.
struct JacobiWork {
    ComplexMatrix a;
    ComplexMatrix v;

    explicit JacobiWork(const ComplexMatrix& m, bool want_vectors)
        : a(m), v(want_vectors ? ComplexMatrix::identity(m.dim()) : ComplexMatrix()) {}

    double off_norm() const {
        double s = 0.0;
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    }

    void rotate(int p, int q) {
        const complexd apq = a(p, q);
        const double mod = std::abs(apq);
        if (mod == 0.0) return;
        const complexd phase = apq / mod;  // e^{i f}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mod);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns: col_p' = c col_p - s conj(phase) col_q,
        //          col_q' = s col_p + c conj(phase) col_q.
        const complexd cp = std::conj(phase);
        for (int i = 0; i < a.dim(); ++i) {
            const complexd aip = a(i, p), aiq = a(i, q);
            a(i, p) = c * aip - s * cp * aiq;
            a(i, q) = s * aip + c * cp * aiq;
        }
        // Rows with the conjugate coefficients.
        for (int j = 0; j < a.dim(); ++j) {
            const complexd apj = a(p, j), aqj = a(q, j);
            a(p, j) = c * apj - s * phase * aqj;
            a(q, j) = s * apj + c * phase * aqj;
        }
        // Clean the pivot pair: mathematically zero after the rotation.
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        if (v.dim() > 0) {
            for (int i = 0; i < v.dim(); ++i) {
                const complexd vip = v(i, p), viq = v(i, q);
                v(i, p) = c * vip - s * cp * viq;
                v(i, q) = s * vip + c * cp * viq;
            }
        }
    }
};

constexpr double kJacobiTol = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

JacobiWork jacobi_diagonalize(const ComplexMatrix& m, bool want_vectors) {
    if (hermiticity_residual(m) > 1e-10) {
        throw std::invalid_argument("hermitian_eigenvalues: hermiticity residual " +
                                    std::to_string(hermiticity_residual(m)) + " exceeds 1e-10");
    }
    // Work on the exactly Hermitian part so tiny residues cannot accumulate.
    ComplexMatrix h(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

    JacobiWork w(h, want_vectors);
    double scale = std::sqrt(hs_norm_sq(h));
    const double tol = kJacobiTol * std::max(1.0, scale);
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (w.off_norm() <= tol) break;
        for (int p = 0; p < h.dim() - 1; ++p)
            for (int q = p + 1; q < h.dim(); ++q) w.rotate(p, q);
    }
    return w;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    JacobiWork w = jacobi_diagonalize(m, false);
    std::vector<double> ev(m.dim());
    for (int i = 0; i < m.dim(); ++i) ev[i] = w.a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    JacobiWork w = jacobi_diagonalize(m, true);
    std::vector<int> order(m.dim());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return w.a(i, i).real() < w.a(j, j).real(); });

    EigenSystem es;
    es.values.resize(m.dim());
    es.vectors = ComplexMatrix(m.dim());
    for (int k = 0; k < m.dim(); ++k) {
        es.values[k] = w.a(order[k], order[k]).real();
        for (int i = 0; i < m.dim(); ++i) es.vectors(i, k) = w.v(i, order[k]);
    }
    return es;
}

}  // namespace xgd
