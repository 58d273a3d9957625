#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <string>

#include "helpers.hpp"
#include "xgd/density_matrix.hpp"
#include "xgd/xstate.hpp"

using xgd::complexd;
using xgd::ComplexMatrix;
using xgd::DensityMatrix;

namespace {

std::string thrown_message(const ComplexMatrix& m) {
    try {
        DensityMatrix::validated(m);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("validated accepts maximally mixed states of dim 2, 4, 8") {
    for (int dim : {2, 4, 8}) {
        const ComplexMatrix m = ComplexMatrix::identity(dim) * complexd(1.0 / dim, 0.0);
        const DensityMatrix rho = DensityMatrix::validated(m);
        CHECK(rho.dim() == dim);
        CHECK(rho.qubits() == (dim == 2 ? 1 : dim == 4 ? 2 : 3));
    }
}

TEST_CASE("validated rejects bad dimension, hermiticity, trace, and PSD") {
    CHECK_THROWS_AS(DensityMatrix::validated(ComplexMatrix::identity(3) * complexd(1.0 / 3, 0)),
                    std::invalid_argument);

    ComplexMatrix nh = ComplexMatrix::identity(2) * complexd(0.5, 0.0);
    nh(0, 1) = complexd(0.1, 0.0);  // (1,0) stays zero
    CHECK(thrown_message(nh).find("hermiticity") != std::string::npos);

    const ComplexMatrix low_trace = ComplexMatrix::identity(2) * complexd(0.45, 0.0);
    const std::string trace_msg = thrown_message(low_trace);
    CHECK(trace_msg.find("trace residual") != std::string::npos);

    ComplexMatrix neg(2);
    neg(0, 0) = complexd(1.2, 0.0);
    neg(1, 1) = complexd(-0.2, 0.0);
    CHECK(thrown_message(neg).find("psd") != std::string::npos);
}

TEST_CASE("partial_trace: product state factors cleanly") {
    // rho = a (x) b with a 4x4 and b 2x2: tracing qubit 3 returns a exactly,
    // tracing qubit 1 or 2 contracts a accordingly.
    const DensityMatrix a = xgdtest::det_matrix(4, 1);
    const DensityMatrix b = xgdtest::det_matrix(2, 2);
    const DensityMatrix rho = DensityMatrix::validated(xgd::kron(a.matrix(), b.matrix()));

    const DensityMatrix r12 = partial_trace(rho, 3);
    REQUIRE(r12.dim() == 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(std::abs(r12(r, c) - a(r, c)) <= 1e-15);

    // Tracing qubit 2 contracts the middle index of a's two qubits.
    const DensityMatrix r13 = partial_trace(rho, 2);
    for (int r1 = 0; r1 < 2; ++r1)
        for (int c1 = 0; c1 < 2; ++c1) {
            const complexd a_contracted = a(2 * r1 + 0, 2 * c1 + 0) + a(2 * r1 + 1, 2 * c1 + 1);
            for (int r3 = 0; r3 < 2; ++r3)
                for (int c3 = 0; c3 < 2; ++c3)
                    CHECK(std::abs(r13(2 * r1 + r3, 2 * c1 + c3) -
                                   a_contracted * b(r3, c3)) <= 1e-15);
        }
}

TEST_CASE("partial_trace: trace preserved, hermitian, rejects bad arguments") {
    const DensityMatrix rho = xgdtest::det_matrix(8, 4);
    for (int q = 1; q <= 3; ++q) {
        const DensityMatrix red = partial_trace(rho, q);
        CHECK(red.dim() == 4);
        CHECK(std::abs(xgd::trace(red.matrix()) - complexd(1, 0)) <= 1e-14);
    }
    CHECK_THROWS_AS(partial_trace(rho, 0), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, 4), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(xgdtest::det_matrix(4, 0), 1), std::invalid_argument);
}

TEST_CASE("partial_trace: GHZ reductions are the even classical mixture") {
    // Tracing any qubit of the pure GHZ state leaves (|00><00| + |11><11|)/2.
    const DensityMatrix ghz = xgd::ghz_mixed(0.0);
    for (int q = 1; q <= 3; ++q) {
        const DensityMatrix red = partial_trace(ghz, q);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                const complexd want =
                    (r == c && (r == 0 || r == 3)) ? complexd(0.5, 0) : complexd(0, 0);
                CHECK(std::abs(red(r, c) - want) <= 1e-15);
            }
    }
}
