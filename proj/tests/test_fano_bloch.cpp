#include <doctest.h>

#include <cmath>
#include <set>
#include <tuple>

#include "helpers.hpp"
#include "xgd/fano_bloch.hpp"
#include "xgd/xstate.hpp"

using xgd::complexd;
using xgd::ComplexMatrix;
using xgd::DensityMatrix;

TEST_CASE("bloch3 of the mixed GHZ family hits the known coefficient support") {
    const double p = 0.3;
    const xgd::CorrelationTensor3 t = xgd::bloch3(xgd::ghz_mixed(p));
    const double w = 1.0 - p;
    // Nonzero coefficients: normalization, pairwise sigma_z correlations, and
    // the four triple products coupling the corner coherences.
    CHECK(t.t[0][0][0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(t.t[3][3][0] == doctest::Approx(w).epsilon(1e-13));
    CHECK(t.t[3][0][3] == doctest::Approx(w).epsilon(1e-13));
    CHECK(t.t[0][3][3] == doctest::Approx(w).epsilon(1e-13));
    CHECK(t.t[1][1][1] == doctest::Approx(w).epsilon(1e-13));
    CHECK(t.t[1][2][2] == doctest::Approx(-w).epsilon(1e-13));
    CHECK(t.t[2][1][2] == doctest::Approx(-w).epsilon(1e-13));
    CHECK(t.t[2][2][1] == doctest::Approx(-w).epsilon(1e-13));
    double off = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g) {
                const bool listed = (a == 0 && b == 0 && g == 0) ||
                                    (a == 3 && b == 3 && g == 0) ||
                                    (a == 3 && b == 0 && g == 3) ||
                                    (a == 0 && b == 3 && g == 3) ||
                                    (a == 1 && b == 1 && g == 1) ||
                                    (a == 1 && b == 2 && g == 2) ||
                                    (a == 2 && b == 1 && g == 2) ||
                                    (a == 2 && b == 2 && g == 1);
                if (!listed) off = std::max(off, std::abs(t.t[a][b][g]));
            }
    CHECK(off <= 1e-13);
}

TEST_CASE("bloch coefficients satisfy the purity identity") {
    // sum T^2 = 8 Tr(rho^2) in three qubits; sum R^2 = 4 Tr(rho^2) in two.
    for (int variant : {0, 1, 5}) {
        const DensityMatrix rho = xgdtest::det_matrix(8, variant);
        const xgd::CorrelationTensor3 t = xgd::bloch3(rho);
        double sum = 0.0;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int g = 0; g < 4; ++g) sum += t.t[a][b][g] * t.t[a][b][g];
        const double purity = xgd::trace(rho.matrix() * rho.matrix()).real();
        CHECK(sum == doctest::Approx(8.0 * purity).epsilon(1e-12));
    }
    const DensityMatrix rho4 = xgdtest::det_matrix(4, 2);
    const xgd::CorrelationMatrix2 r = xgd::bloch2(rho4);
    double sum2 = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) sum2 += r.r[a][b] * r.r[a][b];
    const double purity4 = xgd::trace(rho4.matrix() * rho4.matrix()).real();
    CHECK(sum2 == doctest::Approx(4.0 * purity4).epsilon(1e-12));
}

TEST_CASE("inverse_bloch3 round-trips bloch3") {
    for (int variant : {0, 3}) {
        const DensityMatrix rho = xgdtest::det_matrix(8, variant);
        const ComplexMatrix back = xgd::inverse_bloch3(xgd::bloch3(rho));
        CHECK(xgd::max_abs(back - rho.matrix()) <= 1e-13);
    }
}

TEST_CASE("blocks decompose over the fastest (third) qubit index") {
    const DensityMatrix rho = xgdtest::det_matrix(8, 2);
    const std::array<ComplexMatrix, 4> b = xgd::blocks(rho);
    // Order 00, 01, 10, 11; block(i,j)(a,c) = rho(2a+i, 2c+j).
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const ComplexMatrix& blk = b[static_cast<size_t>(2 * i + j)];
            REQUIRE(blk.dim() == 4);
            for (int a = 0; a < 4; ++a)
                for (int c = 0; c < 4; ++c) CHECK(blk(a, c) == rho(2 * a + i, 2 * c + j));
        }
    // Diagonal blocks carry the full trace.
    CHECK(std::abs(xgd::trace(b[0]) + xgd::trace(b[3]) - complexd(1, 0)) <= 1e-14);
}

TEST_CASE("recursion relations hold on class states and reject other classes") {
    CHECK(xgd::recursion_check(xgd::ghz_mixed(0.4), xgd::XClass::Class1) <= 1e-12);
    CHECK(xgd::recursion_check(xgd::w_mixed(0.2), xgd::XClass::Class2) <= 1e-12);
    CHECK(xgd::recursion_check(xgdtest::anchor_class1(), xgd::XClass::Class1) <= 1e-12);
    CHECK(xgd::recursion_check(xgdtest::anchor_class2(), xgd::XClass::Class2) <= 1e-12);
    CHECK_THROWS_AS(xgd::recursion_check(xgd::ghz_mixed(0.4), xgd::XClass::TwoQubitX),
                    std::invalid_argument);
}

TEST_CASE("class support lists hold exactly 32 triplets each and gate the tensor") {
    int n1 = 0, n2 = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g) {
                n1 += xgd::class1_support(a, b, g) ? 1 : 0;
                n2 += xgd::class2_support(a, b, g) ? 1 : 0;
            }
    CHECK(n1 == 32);
    CHECK(n2 == 32);
    // Spot checks: sigma_z-only words are admissible for both classes; a
    // single transverse index on qubits 1-2 is not.
    CHECK(xgd::class1_support(3, 3, 0));
    CHECK(xgd::class2_support(3, 3, 3));
    CHECK(xgd::class1_support(1, 2, 0));
    CHECK_FALSE(xgd::class1_support(1, 0, 0));
    CHECK(xgd::class2_support(1, 0, 1));   // two transverse indices overall
    CHECK_FALSE(xgd::class2_support(1, 1, 1));

    // Twirled states vanish exactly off support; a generic state does not.
    const xgd::CorrelationTensor3 t1 = xgd::bloch3(xgdtest::anchor_class1());
    const xgd::CorrelationTensor3 t2 = xgd::bloch3(xgdtest::anchor_class2());
    CHECK(xgd::off_support_max(t1, xgd::XClass::Class1) == 0.0);
    CHECK(xgd::off_support_max(t2, xgd::XClass::Class2) == 0.0);
    const xgd::CorrelationTensor3 tg = xgd::bloch3(xgdtest::det_matrix(8, 0));
    CHECK(xgd::off_support_max(tg, xgd::XClass::Class1) > 1e-3);
}

TEST_CASE("bloch2_block accepts non-unit traces, bloch2 requires a state") {
    const DensityMatrix rho = xgdtest::det_matrix(4, 2);
    const ComplexMatrix half = rho.matrix() * complexd(0.5, 0.0);
    const xgd::CorrelationMatrix2 full = xgd::bloch2(rho);
    const xgd::CorrelationMatrix2 scaled = xgd::bloch2_block(half);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(scaled.r[a][b] == doctest::Approx(0.5 * full.r[a][b]).epsilon(1e-13));
    CHECK(full.r[0][0] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("block_coeff reproduces entries of off-diagonal blocks") {
    // For the 01 block of a Hermitian state the coefficients are genuinely
    // complex; contracting them back against the Pauli basis must restore the
    // block entrywise.
    const DensityMatrix rho = xgdtest::det_matrix(8, 1);
    const std::array<ComplexMatrix, 4> b = xgd::blocks(rho);
    const ComplexMatrix& b01 = b[1];
    ComplexMatrix rebuilt(4);
    for (int a = 0; a < 4; ++a)
        for (int c = 0; c < 4; ++c) {
            const complexd coeff = xgd::detail::block_coeff(b01, a, c);
            const ComplexMatrix& s = xgd::detail::pauli2(a, c);
            for (int r = 0; r < 4; ++r)
                for (int q = 0; q < 4; ++q) rebuilt(r, q) += 0.25 * coeff * s(r, q);
        }
    CHECK(xgd::max_abs(rebuilt - b01) <= 1e-13);
}
