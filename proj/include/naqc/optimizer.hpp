// Maximization of the steering functional over the shared measurement-frame
// angles, Werner-family scans and bound-crossing thresholds.
#ifndef NAQC_OPTIMIZER_HPP
#define NAQC_OPTIMIZER_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "naqc/naqc.hpp"
#include "naqc/qmatrix.hpp"

namespace naqc {

struct OptResult {
    double s_max = 0.0;
    double theta = 0.0;          // [0, pi]
    double phi = 0.0;            // [0, 2 pi)
    std::size_t evaluations = 0;
    // populated only in independent-frames mode (Bob's frame)
    std::optional<double> theta_b;
    std::optional<double> phi_b;
};

struct OptimizeOptions {
    std::size_t grid_theta = 64;
    std::size_t grid_phi = 32;
    bool independent_frames = false;  // exploratory: Alice and Bob frames decoupled
    double simplex_tol = 1e-8;        // terminate when simplex diameter drops below
    std::size_t max_evals = 2000;     // refinement budget
};

// Grid search plus Nelder-Mead refinement; Alice's measurement triple and
// Bob's coherence triple share one rotated frame unless independent_frames.
OptResult optimize_s(const DensityMatrix& rho_ab, const CoherenceMeasure& measure,
                     const OptimizeOptions& options = {});

// Single objective evaluation at a fixed frame (used by tests and the CLI).
double s_at_frame(const DensityMatrix& rho_ab, const CoherenceMeasure& measure, double theta,
                  double phi, IndexPattern pattern = IndexPattern::Distinct);

struct ScanRecord {
    double p_w = 0.0;
    OptResult opt;
    double s_full_pattern = 0.0;  // Full pattern value at the optimal frame
    double bound_lhs = 0.0;
    double bound_sqi = 0.0;
};

std::vector<ScanRecord> scan_werner(const CoherenceMeasure& measure,
                                    const std::vector<double>& p_grid,
                                    const OptimizeOptions& options = {});

struct ThresholdResult {
    bool found = false;   // false: no violation anywhere in the family
    double p_star = 0.0;  // bisected to |interval| < 1e-4
};

ThresholdResult find_threshold(const CoherenceMeasure& measure, BoundKind bound_kind,
                               const OptimizeOptions& options = {});

}  // namespace naqc

#endif  // NAQC_OPTIMIZER_HPP
