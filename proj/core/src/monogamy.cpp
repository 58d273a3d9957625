#include "xgd/monogamy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "xgd/geodiscord.hpp"
#include "xgd/xstate.hpp"

namespace xgd {

double pairwise_discord_12(const DensityMatrix& rho) {
    return discord2(partial_trace(rho, 3)).value;
}

double pairwise_discord_13(const DensityMatrix& rho) {
    return discord2(partial_trace(rho, 2)).value;
}

MonogamyReport monogamy_report(const DensityMatrix& rho) {
    MonogamyReport r;
    r.d_1_23 = discord3(rho).value;
    r.d_12 = pairwise_discord_12(rho);
    r.d_13 = pairwise_discord_13(rho);
    r.residual = r.d_1_23 - r.d_12 - r.d_13;
    r.monogamous = r.residual >= -1e-10;
    r.cls = classify(rho);
    return r;
}

namespace {
double sq(double v) { return v * v; }

std::array<double, 3> lambda_of(double corner, double inner, double d1, double d2) {
    return {4.0 * sq(corner + inner), 4.0 * sq(corner - inner), 2.0 * (sq(d1) + sq(d2))};
}

void require_dim8(const DensityMatrix& rho, const char* who) {
    if (rho.dim() != 8) {
        throw std::invalid_argument(std::string(who) + ": expected an 8x8 state, got dimension " +
                                    std::to_string(rho.dim()));
    }
}
}  // namespace

std::array<double, 3> reduced_lambda_12(const DensityMatrix& rho) {
    require_dim8(rho, "reduced_lambda_12");
    const double corner = std::abs(rho(0, 6) + rho(1, 7));
    const double inner = std::abs(rho(2, 4) + rho(3, 5));
    const double d1 = (rho(0, 0) + rho(1, 1) - rho(4, 4) - rho(5, 5)).real();
    const double d2 = (rho(2, 2) + rho(3, 3) - rho(6, 6) - rho(7, 7)).real();
    return lambda_of(corner, inner, d1, d2);
}

std::array<double, 3> reduced_lambda_13(const DensityMatrix& rho) {
    require_dim8(rho, "reduced_lambda_13");
    const double corner = std::abs(rho(0, 5) + rho(2, 7));
    const double inner = std::abs(rho(1, 4) + rho(3, 6));
    const double d1 = (rho(0, 0) + rho(2, 2) - rho(4, 4) - rho(6, 6)).real();
    const double d2 = (rho(1, 1) + rho(3, 3) - rho(5, 5) - rho(7, 7)).real();
    return lambda_of(corner, inner, d1, d2);
}

}  // namespace xgd
