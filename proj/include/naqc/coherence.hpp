// Coherence measures in a given basis: l1 norm (optionally normalized by
// d-1) and relative entropy, together with qubit closed forms and the
// complementarity sum over a MUB family.
#ifndef NAQC_COHERENCE_HPP
#define NAQC_COHERENCE_HPP

#include <cstddef>

#include "naqc/mub.hpp"
#include "naqc/qmatrix.hpp"

namespace naqc {

enum class MeasureKind { L1, RelativeEntropy };

struct CoherenceMeasure {
    MeasureKind kind = MeasureKind::L1;
    bool normalized = false;  // divide l1 by d-1 (no effect on qubits)

    static CoherenceMeasure l1(bool normalized = false) {
        return CoherenceMeasure{MeasureKind::L1, normalized};
    }
    static CoherenceMeasure relative_entropy() {
        return CoherenceMeasure{MeasureKind::RelativeEntropy, false};
    }
    // normalization defaults: off for d = 2, on for d >= 3
    static CoherenceMeasure default_for(MeasureKind kind, std::size_t dim);

    bool operator==(const CoherenceMeasure&) const = default;
};

struct OmegaBound {
    CoherenceMeasure measure;
    std::size_t dim = 2;
    double value = 2.0;
};

// Single-system ceiling on sum_i C_i^2 over a full MUB family: 2 for qubits
// (both measures), d for the normalized qudit l1 norm.
OmegaBound omega(const CoherenceMeasure& measure, std::size_t dim);

// Coherence of rho in the given basis. Relative entropy is computed from the
// general definition S(diag(rho)) - S(rho). Results within 1e-12 of zero are
// clamped to exactly 0.
double coherence(const DensityMatrix& rho, const Basis& basis, const CoherenceMeasure& measure);

// sqrt(r_j^2 + r_k^2) for the axis pair complementary to `axis` in {1,2,3}.
double qubit_l1_closed_form(const BlochVector& r, int axis);

// sum over the family's bases of coherence^2
double complementarity_sum(const DensityMatrix& rho, const MubFamily& fam,
                           const CoherenceMeasure& measure);

}  // namespace naqc

#endif  // NAQC_COHERENCE_HPP
