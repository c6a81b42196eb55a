#include "naqc/coherence.hpp"

#include <cmath>
#include <stdexcept>

namespace naqc {

namespace {

double clamp_small(double v) {
    if (std::abs(v) < 1e-12) return 0.0;
    if (v < 0.0 && v > -1e-9) return 0.0;  // numerical noise on a nonnegative quantity
    return v;
}

// Diagonal of U^dag rho U, i.e. <v_a| rho |v_a> for the basis vectors.
// Computed directly to avoid forming the full conjugated matrix.
void basis_populations(const DensityMatrix& rho, const Basis& basis, std::vector<double>& out) {
    const std::size_t d = rho.dim();
    out.resize(d);
    for (std::size_t a = 0; a < d; ++a) {
        const auto& v = basis.vectors[a];
        cx acc{0.0, 0.0};
        for (std::size_t r = 0; r < d; ++r) {
            cx row{0.0, 0.0};
            for (std::size_t c = 0; c < d; ++c) row += rho.mat()(r, c) * v[c];
            acc += std::conj(v[r]) * row;
        }
        out[a] = acc.real();
    }
}

}  // namespace

CoherenceMeasure CoherenceMeasure::default_for(MeasureKind kind, std::size_t dim) {
    if (kind == MeasureKind::RelativeEntropy) return relative_entropy();
    return l1(dim >= 3);
}

OmegaBound omega(const CoherenceMeasure& measure, std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("omega: dimension must be >= 2");
    if (dim == 2) return OmegaBound{measure, dim, 2.0};
    if (measure.kind == MeasureKind::L1 && measure.normalized) {
        return OmegaBound{measure, dim, static_cast<double>(dim)};
    }
    throw std::invalid_argument(
        "omega: for d > 2 only the normalized l1 measure has an established ceiling");
}

double coherence(const DensityMatrix& rho, const Basis& basis, const CoherenceMeasure& measure) {
    const std::size_t d = rho.dim();
    if (basis.dim != d) {
        throw std::invalid_argument("coherence: basis dimension does not match state");
    }

    if (measure.kind == MeasureKind::L1) {
        // sum_{m != n} |<v_m| rho |v_n>|, via the conjugated matrix
        const ComplexMatrix u = basis.as_unitary();
        const ComplexMatrix in_basis = u.dagger() * rho.mat() * u;
        double sum = 0.0;
        for (std::size_t m = 0; m < d; ++m) {
            for (std::size_t n = 0; n < d; ++n) {
                if (m != n) sum += std::abs(in_basis(m, n));
            }
        }
        if (measure.normalized) sum /= static_cast<double>(d - 1);
        return clamp_small(sum);
    }

    // relative entropy: S(diag(rho)) - S(rho)
    std::vector<double> pops;
    basis_populations(rho, basis, pops);
    double diag_entropy = 0.0;
    for (double p : pops) {
        if (p > 0.0) diag_entropy -= p * std::log2(p);
    }
    return clamp_small(diag_entropy - vn_entropy(rho));
}

double qubit_l1_closed_form(const BlochVector& r, int axis) {
    switch (axis) {
        case 1: return std::sqrt(r.r2 * r.r2 + r.r3 * r.r3);
        case 2: return std::sqrt(r.r3 * r.r3 + r.r1 * r.r1);
        case 3: return std::sqrt(r.r1 * r.r1 + r.r2 * r.r2);
        default: throw std::invalid_argument("qubit_l1_closed_form: axis must be 1, 2 or 3");
    }
}

double complementarity_sum(const DensityMatrix& rho, const MubFamily& fam,
                           const CoherenceMeasure& measure) {
    if (fam.dim != rho.dim()) {
        throw std::invalid_argument("complementarity_sum: family dimension does not match state");
    }
    double sum = 0.0;
    for (const Basis& b : fam.bases) {
        const double c = coherence(rho, b, measure);
        sum += c * c;
    }
    return sum;
}

}  // namespace naqc
