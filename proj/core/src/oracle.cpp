#include "xgd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "xgd/fano_bloch.hpp"
#include "xgd/geodiscord.hpp"

namespace xgd {

namespace {

void validate_grid(const SphereGrid& g) {
    if (g.n_theta < 8 || g.n_phi < 16) {
        throw std::invalid_argument("SphereGrid: n_theta >= 8 and n_phi >= 16 required, got " +
                                    std::to_string(g.n_theta) + "x" + std::to_string(g.n_phi));
    }
    if (!(g.refine_tol > 0.0)) {
        throw std::invalid_argument("SphereGrid: refine_tol must be positive");
    }
    if (g.max_refine_iters < 1) {
        throw std::invalid_argument("SphereGrid: max_refine_iters must be at least 1");
    }
}

std::array<double, 3> direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

// Golden-section minimization of f over [a, b] down to interval width tol.
// Deterministic and derivative-free.
double golden_min(const std::function<double(double)>& f, double a, double b, double tol,
                  double* fmin) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    if (f1 <= f2) {
        if (fmin) *fmin = f1;
        return x1;
    }
    if (fmin) *fmin = f2;
    return x2;
}

struct Minimum {
    double value = 0.0;
    double grid_min = 0.0;
    double theta = 0.0, phi = 0.0;
    long grid_evals = 0;
};

struct GridPoint {
    double value;
    double theta, phi;
};

// Shared grid scan + golden-section descent on (theta, phi). The descent is
// restarted from several well-separated top grid points: with nearly
// degenerate leading K eigenvalues the basins differ by less than the grid
// discretization error, so the single best grid point may sit in the wrong
// basin, which no amount of local descent can leave.
Minimum minimize_on_sphere(const std::function<double(double, double)>& f,
                           const SphereGrid& grid) {
    Minimum m;
    m.value = std::numeric_limits<double>::infinity();
    const double dtheta = M_PI / grid.n_theta;
    const double dphi = 2.0 * M_PI / grid.n_phi;
    std::vector<GridPoint> points;
    points.reserve(static_cast<size_t>(grid.n_theta + 1) * grid.n_phi);
    for (int i = 0; i <= grid.n_theta; ++i) {
        const double theta = i * dtheta;
        for (int j = 0; j < grid.n_phi; ++j) {
            const double phi = j * dphi;
            const double v = f(theta, phi);
            ++m.grid_evals;
            points.push_back({v, theta, phi});
            if (v < m.value) {
                m.value = v;
                m.theta = theta;
                m.phi = phi;
            }
        }
    }
    m.grid_min = m.value;

    // Candidate starts: best grid points pairwise separated by a few cells.
    // The objective is even in e, so antipodal points count as duplicates.
    std::sort(points.begin(), points.end(),
              [](const GridPoint& a, const GridPoint& b) { return a.value < b.value; });
    constexpr size_t kMaxStarts = 12;
    const double min_cos = std::cos(2.5 * std::max(dtheta, dphi));
    std::vector<GridPoint> starts;
    for (const GridPoint& p : points) {
        if (starts.size() >= kMaxStarts) break;
        const std::array<double, 3> ep = direction(p.theta, p.phi);
        bool fresh = true;
        for (const GridPoint& s : starts) {
            const std::array<double, 3> es = direction(s.theta, s.phi);
            const double dot = ep[0] * es[0] + ep[1] * es[1] + ep[2] * es[2];
            if (std::abs(dot) >= min_cos) {
                fresh = false;
                break;
            }
        }
        if (fresh) starts.push_back(p);
    }

    // Golden-section descent with a Powell-style direction set: minimize along
    // each current direction, then along the sweep's net displacement, which
    // replaces the direction that contributed the largest single decrease.
    // Plain axis-alternation stalls in valleys diagonal to the (theta, phi)
    // axes when the two largest K eigenvalues nearly coincide; the adaptive
    // set keeps the improvement per sweep meaningful until convergence. The
    // set is re-squared to the grid axes every few sweeps so it cannot
    // degenerate into two collinear directions.
    constexpr double kLineTol = 1e-13;
    auto refine = [&](GridPoint p) {
        double u[2][2] = {{dtheta, 0.0}, {0.0, dphi}};
        auto line_minimize = [&](const double v[2]) {
            double fmin = 0.0;
            const double step = golden_min(
                [&](double s) { return f(p.theta + s * v[0], p.phi + s * v[1]); }, -1.5, 1.5,
                kLineTol, &fmin);
            if (fmin < p.value) {
                p.theta += step * v[0];
                p.phi += step * v[1];
                p.value = fmin;
            }
        };
        for (int it = 0; it < grid.max_refine_iters; ++it) {
            if (it % 3 == 0) {
                u[0][0] = dtheta;
                u[0][1] = 0.0;
                u[1][0] = 0.0;
                u[1][1] = dphi;
            }
            const double before = p.value;
            const double theta0 = p.theta, phi0 = p.phi;
            int biggest = 0;
            double biggest_drop = -1.0;
            for (int k = 0; k < 2; ++k) {
                const double prev = p.value;
                line_minimize(u[k]);
                if (prev - p.value > biggest_drop) {
                    biggest_drop = prev - p.value;
                    biggest = k;
                }
            }
            const double disp[2] = {p.theta - theta0, p.phi - phi0};
            if (disp[0] != 0.0 || disp[1] != 0.0) {
                line_minimize(disp);
                u[biggest][0] = disp[0];
                u[biggest][1] = disp[1];
            }
            if (before - p.value < grid.refine_tol) break;
        }
        return p;
    };

    for (const GridPoint& start : starts) {
        const GridPoint refined = refine(start);
        if (refined.value < m.value) {
            m.value = refined.value;
            m.theta = refined.theta;
            m.phi = refined.phi;
        }
    }
    return m;
}

bool chi_positive(const ComplexMatrix& chi) {
    return hermitian_eigenvalues(chi).front() >= -DensityMatrix::kPsdTol;
}

// Projective measurement of qubit 1 along +-e: chi = P+ rho P+ + P- rho P-.
ComplexMatrix measured_state(const ComplexMatrix& rho, const std::array<double, 3>& e) {
    const int half = rho.dim() / 2;
    ComplexMatrix ns(2);
    ns(0, 0) = e[2];
    ns(0, 1) = complexd(e[0], -e[1]);
    ns(1, 0) = complexd(e[0], e[1]);
    ns(1, 1) = -e[2];
    const ComplexMatrix eye2 = ComplexMatrix::identity(2);
    const ComplexMatrix pp = kron((eye2 + ns) * complexd(0.5, 0.0), ComplexMatrix::identity(half));
    const ComplexMatrix pm = kron((eye2 - ns) * complexd(0.5, 0.0), ComplexMatrix::identity(half));
    return pp * rho * pp + pm * rho * pm;
}

}  // namespace

OracleResult oracle_discord_sphere(const DensityMatrix& rho, const SphereGrid& grid) {
    validate_grid(grid);
    if (rho.dim() != 8) {
        throw std::invalid_argument("oracle_discord_sphere: expected an 8x8 state, got dimension " +
                                    std::to_string(rho.dim()));
    }
    const CorrelationTensor3 t = bloch3(rho);
    const double x[3] = {t.t[1][0][0], t.t[2][0][0], t.t[3][0][0]};
    // Totals of the inner optimum that do not depend on e.
    double total = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    for (int b = 0; b < 4; ++b)
        for (int g = 0; g < 4; ++g) {
            if (b == 0 && g == 0) continue;
            for (int i = 1; i <= 3; ++i) total += t.t[i][b][g] * t.t[i][b][g];
        }

    auto objective = [&](double theta, double phi) {
        const std::array<double, 3> e = direction(theta, phi);
        double captured = 0.0;
        {
            const double w = e[0] * x[0] + e[1] * x[1] + e[2] * x[2];
            captured += w * w;
        }
        for (int b = 0; b < 4; ++b)
            for (int g = 0; g < 4; ++g) {
                if (b == 0 && g == 0) continue;
                const double w =
                    e[0] * t.t[1][b][g] + e[1] * t.t[2][b][g] + e[2] * t.t[3][b][g];
                captured += w * w;
            }
        return (total - captured) / 8.0;
    };

    const Minimum m = minimize_on_sphere(objective, grid);
    OracleResult r;
    r.value = m.value;
    r.grid_min = m.grid_min;
    r.e_min = direction(m.theta, m.phi);
    r.grid_evals = m.grid_evals;
    r.chi_psd_ok = chi_positive(measured_state(rho.matrix(), r.e_min));
    return r;
}

OracleResult oracle_discord_measurement(const DensityMatrix& rho, const SphereGrid& grid) {
    validate_grid(grid);
    if (rho.dim() != 4 && rho.dim() != 8) {
        throw std::invalid_argument(
            "oracle_discord_measurement: expected a 4x4 or 8x8 state, got dimension " +
            std::to_string(rho.dim()));
    }
    auto objective = [&](double theta, double phi) {
        const ComplexMatrix chi = measured_state(rho.matrix(), direction(theta, phi));
        return hs_norm_sq(rho.matrix() - chi);
    };
    const Minimum m = minimize_on_sphere(objective, grid);
    OracleResult r;
    r.value = m.value;
    r.grid_min = m.grid_min;
    r.e_min = direction(m.theta, m.phi);
    r.grid_evals = m.grid_evals;
    r.chi_psd_ok = chi_positive(measured_state(rho.matrix(), r.e_min));
    return r;
}

double hs_distance_to_classical(const ComplexMatrix& rho, const ComplexMatrix& chi) {
    if (rho.dim() != chi.dim()) {
        throw std::invalid_argument("hs_distance_to_classical: shape mismatch " +
                                    std::to_string(rho.dim()) + " vs " +
                                    std::to_string(chi.dim()));
    }
    return hs_norm_sq(rho - chi);
}

}  // namespace xgd
