#include "naqc/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace naqc {

namespace {

constexpr double kPi = std::numbers::pi;

// Map an unconstrained frame onto theta in [0, pi], phi in [0, 2 pi) using
// the exact symmetries bases(theta + 2 pi) = bases(theta) and
// bases(-theta, phi) = bases(theta, phi + pi).
void normalize_frame(double& theta, double& phi) {
    theta = std::fmod(theta, 2.0 * kPi);
    if (theta < 0.0) theta += 2.0 * kPi;
    if (theta > kPi) {
        theta = 2.0 * kPi - theta;
        phi += kPi;
    }
    phi = std::fmod(phi, 2.0 * kPi);
    if (phi < 0.0) phi += 2.0 * kPi;
    if (phi >= 2.0 * kPi) phi = 0.0;  // rounding can land exactly on the seam
}

// Nelder-Mead maximizer. Coefficients: reflection 1, expansion 2,
// contraction 0.5, shrink 0.5. Stops when the simplex diameter falls below
// `tol` or the evaluation budget is exhausted.
struct SimplexPoint {
    std::vector<double> x;
    double f = 0.0;
};

void nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                 std::vector<SimplexPoint>& simplex, double tol, std::size_t max_evals,
                 std::size_t& evals) {
    const std::size_t dim = simplex.front().x.size();
    const std::size_t used_at_entry = evals;
    auto diameter = [&] {
        double d = 0.0;
        for (std::size_t i = 0; i < simplex.size(); ++i) {
            for (std::size_t j = i + 1; j < simplex.size(); ++j) {
                double s = 0.0;
                for (std::size_t m = 0; m < dim; ++m) {
                    const double diff = simplex[i].x[m] - simplex[j].x[m];
                    s += diff * diff;
                }
                d = std::max(d, std::sqrt(s));
            }
        }
        return d;
    };
    auto eval = [&](const std::vector<double>& x) {
        ++evals;
        return objective(x);
    };

    while (diameter() > tol && evals - used_at_entry < max_evals) {
        std::sort(simplex.begin(), simplex.end(),
                  [](const SimplexPoint& a, const SimplexPoint& b) { return a.f > b.f; });
        SimplexPoint& worst = simplex.back();

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
            for (std::size_t m = 0; m < dim; ++m) centroid[m] += simplex[i].x[m];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double coeff) {
            std::vector<double> x(dim);
            for (std::size_t m = 0; m < dim; ++m) {
                x[m] = centroid[m] + coeff * (centroid[m] - worst.x[m]);
            }
            return x;
        };

        const std::vector<double> xr = blend(1.0);
        const double fr = eval(xr);
        if (fr > simplex.front().f) {
            const std::vector<double> xe = blend(2.0);
            const double fe = eval(xe);
            if (fe > fr) {
                worst = {xe, fe};
            } else {
                worst = {xr, fr};
            }
            continue;
        }
        if (fr > simplex[simplex.size() - 2].f) {
            worst = {xr, fr};
            continue;
        }
        const std::vector<double> xc = blend(-0.5);
        const double fc = eval(xc);
        if (fc >= worst.f) {
            worst = {xc, fc};
            continue;
        }
        // shrink toward the best vertex
        for (std::size_t i = 1; i < simplex.size(); ++i) {
            for (std::size_t m = 0; m < dim; ++m) {
                simplex[i].x[m] = 0.5 * (simplex[i].x[m] + simplex[0].x[m]);
            }
            simplex[i].f = eval(simplex[i].x);
        }
    }
    std::sort(simplex.begin(), simplex.end(),
              [](const SimplexPoint& a, const SimplexPoint& b) { return a.f > b.f; });
}

}  // namespace

double s_at_frame(const DensityMatrix& rho_ab, const CoherenceMeasure& measure, double theta,
                  double phi, IndexPattern pattern) {
    const MubFamily fam = rotated_qubit_mubs(theta, phi);
    return s_quantity(steer(rho_ab, fam), fam, measure, pattern);
}

namespace {

double s_two_frames(const DensityMatrix& rho_ab, const CoherenceMeasure& measure,
                    double theta_a, double phi_a, double theta_b, double phi_b) {
    const MubFamily alice = rotated_qubit_mubs(theta_a, phi_a);
    const MubFamily bob = rotated_qubit_mubs(theta_b, phi_b);
    return s_quantity(steer(rho_ab, alice), bob, measure, IndexPattern::Distinct);
}

}  // namespace

OptResult optimize_s(const DensityMatrix& rho_ab, const CoherenceMeasure& measure,
                     const OptimizeOptions& options) {
    const auto dims = rho_ab.dims();
    if (dims.first != 2 || dims.second != 2) {
        throw std::invalid_argument("optimize_s: only two-qubit states are supported");
    }
    if (options.grid_theta < 2 || options.grid_phi < 1) {
        throw std::invalid_argument("optimize_s: grid too coarse");
    }

    OptResult result;
    const double dtheta = kPi / static_cast<double>(options.grid_theta - 1);
    const double dphi = 2.0 * kPi / static_cast<double>(options.grid_phi);

    if (!options.independent_frames) {
        auto objective = [&](const std::vector<double>& x) {
            return s_at_frame(rho_ab, measure, x[0], x[1]);
        };
        double best = -1.0;
        double best_theta = 0.0;
        double best_phi = 0.0;
        for (std::size_t it = 0; it < options.grid_theta; ++it) {
            const double theta = dtheta * static_cast<double>(it);
            for (std::size_t ip = 0; ip < options.grid_phi; ++ip) {
                const double phi = dphi * static_cast<double>(ip);
                const double v = objective({theta, phi});
                ++result.evaluations;
                if (v > best) {
                    best = v;
                    best_theta = theta;
                    best_phi = phi;
                }
            }
        }
        std::vector<SimplexPoint> simplex;
        for (const auto& [dt, dp] : std::array<std::pair<double, double>, 3>{
                 {{0.0, 0.0}, {0.5 * dtheta, 0.0}, {0.0, 0.5 * dphi}}}) {
            SimplexPoint pt;
            pt.x = {best_theta + dt, best_phi + dp};
            pt.f = objective(pt.x);
            ++result.evaluations;
            simplex.push_back(std::move(pt));
        }
        nelder_mead(objective, simplex, options.simplex_tol, options.max_evals,
                    result.evaluations);
        result.theta = simplex.front().x[0];
        result.phi = simplex.front().x[1];
        normalize_frame(result.theta, result.phi);
        result.s_max = s_at_frame(rho_ab, measure, result.theta, result.phi);
        ++result.evaluations;
        return result;
    }

    // independent frames: coarser 4-parameter grid, then one simplex
    auto objective4 = [&](const std::vector<double>& x) {
        return s_two_frames(rho_ab, measure, x[0], x[1], x[2], x[3]);
    };
    const std::size_t gt = std::max<std::size_t>(2, options.grid_theta / 4);
    const std::size_t gp = std::max<std::size_t>(1, options.grid_phi / 4);
    double best = -1.0;
    std::vector<double> best_x(4, 0.0);
    for (std::size_t ia = 0; ia < gt; ++ia) {
        for (std::size_t ja = 0; ja < gp; ++ja) {
            for (std::size_t ib = 0; ib < gt; ++ib) {
                for (std::size_t jb = 0; jb < gp; ++jb) {
                    const std::vector<double> x{
                        kPi * static_cast<double>(ia) / static_cast<double>(gt - 1),
                        2.0 * kPi * static_cast<double>(ja) / static_cast<double>(gp),
                        kPi * static_cast<double>(ib) / static_cast<double>(gt - 1),
                        2.0 * kPi * static_cast<double>(jb) / static_cast<double>(gp)};
                    const double v = objective4(x);
                    ++result.evaluations;
                    if (v > best) {
                        best = v;
                        best_x = x;
                    }
                }
            }
        }
    }
    std::vector<SimplexPoint> simplex;
    simplex.push_back({best_x, best});
    for (std::size_t m = 0; m < 4; ++m) {
        std::vector<double> x = best_x;
        x[m] += 0.2;
        SimplexPoint pt{x, objective4(x)};
        ++result.evaluations;
        simplex.push_back(std::move(pt));
    }
    nelder_mead(objective4, simplex, options.simplex_tol, options.max_evals, result.evaluations);
    double ta = simplex.front().x[0], pa = simplex.front().x[1];
    double tb = simplex.front().x[2], pb = simplex.front().x[3];
    normalize_frame(ta, pa);
    normalize_frame(tb, pb);
    result.theta = ta;
    result.phi = pa;
    result.theta_b = tb;
    result.phi_b = pb;
    result.s_max = s_two_frames(rho_ab, measure, ta, pa, tb, pb);
    ++result.evaluations;
    return result;
}

std::vector<ScanRecord> scan_werner(const CoherenceMeasure& measure,
                                    const std::vector<double>& p_grid,
                                    const OptimizeOptions& options) {
    std::vector<ScanRecord> records;
    records.reserve(p_grid.size());
    for (double p_w : p_grid) {
        if (p_w < 0.0 || p_w > 1.0) {
            throw std::invalid_argument("scan_werner: p_w outside [0,1]");
        }
        ScanRecord rec;
        rec.p_w = p_w;
        const DensityMatrix rho = werner_state(p_w);
        rec.opt = optimize_s(rho, measure, options);
        rec.s_full_pattern =
            s_at_frame(rho, measure, rec.opt.theta, rec.opt.phi, IndexPattern::Full);
        rec.bound_lhs = bound(BoundKind::LHS, 2, measure);
        rec.bound_sqi = bound(BoundKind::SQI1, 2, measure);
        records.push_back(std::move(rec));
    }
    return records;
}

ThresholdResult find_threshold(const CoherenceMeasure& measure, BoundKind bound_kind,
                               const OptimizeOptions& options) {
    const double limit = bound(bound_kind, 2, measure);
    auto excess = [&](double p_w) {
        return optimize_s(werner_state(p_w), measure, options).s_max - limit;
    };

    double lo = 0.0;
    double hi = 1.0;
    // the Werner curve is monotone; a crossing exists iff the endpoint exceeds
    if (excess(hi) <= 1e-6) return ThresholdResult{false, 0.0};
    if (excess(lo) > 0.0) return ThresholdResult{true, 0.0};
    while (hi - lo >= 1e-4) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return ThresholdResult{true, 0.5 * (lo + hi)};
}

}  // namespace naqc
