#pragma once

#include <array>

#include "xgd/density_matrix.hpp"
#include "xgd/xclass.hpp"

namespace xgd {

/// Monogamy evaluation D(1|23) >= D(1,2) + D(1,3) for one state. The flag
/// only reports the sign of the residual; general states may violate the
/// inequality and are never rejected.
struct MonogamyReport {
    double d_1_23 = 0.0;
    double d_12 = 0.0;
    double d_13 = 0.0;
    double residual = 0.0;  ///< d_1_23 - d_12 - d_13
    bool monogamous = false;  ///< residual >= -1e-10
    XClass cls = XClass::NonX;
};

/// Discord of the 1-2 reduction: discord2(partial_trace(rho, 3)).
double pairwise_discord_12(const DensityMatrix& rho);

/// Discord of the 1-3 reduction: discord2(partial_trace(rho, 2)). For every
/// class-1 state the reduction is block-diagonal in qubit 1 (classical-
/// quantum), so the value is exactly 0.
double pairwise_discord_13(const DensityMatrix& rho);

/// Assembles discord3 and both pairwise discords.
MonogamyReport monogamy_report(const DensityMatrix& rho);

/// Closed-form spectrum (l1, l2, l3) of the 1-2 reduction written directly in
/// the 8x8 entries (independent of partial_trace; used to cross-check it):
/// with r = Tr_3(rho), r14 = rho(0,6) + rho(1,7), r23 = rho(2,4) + rho(3,5),
/// and the diagonal sums rho(2a,2a) + rho(2a+1,2a+1).
std::array<double, 3> reduced_lambda_12(const DensityMatrix& rho);

/// Same for the 1-3 reduction: s14 = rho(0,5) + rho(2,7),
/// s23 = rho(1,4) + rho(3,6), diagonals rho(a,a) + rho(a+2,a+2) pattern.
std::array<double, 3> reduced_lambda_13(const DensityMatrix& rho);

}  // namespace xgd
