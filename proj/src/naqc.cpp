#include "naqc/naqc.hpp"

#include <cmath>
#include <stdexcept>

namespace naqc {

namespace {

constexpr double kZeroProb = 1e-12;

bool in_pattern(IndexPattern pattern, std::size_t i, std::size_t j, std::size_t k) {
    switch (pattern) {
        case IndexPattern::Distinct: return i != j && j != k && i != k;
        case IndexPattern::IEqualsJ: return i == j;
        case IndexPattern::INeqJEqualsK: return j == k && i != j;
        case IndexPattern::IEqualsKNeqJ: return i == k && j != i;
        case IndexPattern::Full: return true;
    }
    return false;
}

double pattern_sum(const std::vector<std::vector<double>>& avg, IndexPattern pattern) {
    const std::size_t n = avg.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (in_pattern(pattern, i, j, k)) s += avg[i][k] * avg[j][k];
            }
        }
    }
    return s;
}

void check_compatible(const Assemblage& asm_table, const MubFamily& bob_fam) {
    if (asm_table.dim != bob_fam.dim) {
        throw std::invalid_argument("s_quantity: assemblage and family dimensions differ");
    }
    if (asm_table.settings != bob_fam.bases.size()) {
        throw std::invalid_argument(
            "s_quantity: setting count must equal the number of bases in the family");
    }
}

// sigma carries absolute rounding noise ~1e-14 that 1/p amplifies, so the
// normalized state is symmetrized and validated at a tolerance scaled by 1/p.
DensityMatrix normalized_conditional(const ComplexMatrix& sigma, double pax) {
    ComplexMatrix m = sigma * cx{1.0 / pax, 0.0};
    ComplexMatrix herm(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            herm(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    const double tol = std::max(validation_tolerance(), 2e-14 / pax);
    return DensityMatrix(std::move(herm), tol);
}

}  // namespace

std::string pattern_name(IndexPattern pattern) {
    switch (pattern) {
        case IndexPattern::Distinct: return "i_ne_j_ne_k";
        case IndexPattern::IEqualsJ: return "i_eq_j";
        case IndexPattern::INeqJEqualsK: return "i_ne_j_eq_k";
        case IndexPattern::IEqualsKNeqJ: return "i_eq_k_ne_j";
        case IndexPattern::Full: return "full";
    }
    throw std::invalid_argument("pattern_name: bad pattern");
}

IndexPattern parse_pattern(const std::string& name) {
    for (IndexPattern p : {IndexPattern::Distinct, IndexPattern::IEqualsJ,
                           IndexPattern::INeqJEqualsK, IndexPattern::IEqualsKNeqJ,
                           IndexPattern::Full}) {
        if (pattern_name(p) == name) return p;
    }
    throw std::invalid_argument("unknown index pattern '" + name +
                                "' (expected i_ne_j_ne_k, i_eq_j, i_ne_j_eq_k, "
                                "i_eq_k_ne_j or full)");
}

std::vector<std::vector<double>> average_coherence_table(const Assemblage& asm_table,
                                                         const MubFamily& bob_fam,
                                                         const CoherenceMeasure& measure) {
    check_compatible(asm_table, bob_fam);
    const std::size_t n = asm_table.settings;
    std::vector<std::vector<double>> avg(n, std::vector<double>(n, 0.0));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t a = 0; a < asm_table.outcomes; ++a) {
            const double pax = asm_table.p[x][a];
            if (pax < kZeroProb) continue;  // null conditional state, contributes 0
            const DensityMatrix cond = normalized_conditional(asm_table.sigma[x][a], pax);
            for (std::size_t k = 0; k < n; ++k) {
                avg[x][k] += pax * coherence(cond, bob_fam.bases[k], measure);
            }
        }
    }
    return avg;
}

double s_quantity(const Assemblage& asm_table, const MubFamily& bob_fam,
                  const CoherenceMeasure& measure, IndexPattern pattern) {
    return pattern_sum(average_coherence_table(asm_table, bob_fam, measure), pattern);
}

double s_quantity_k_term(const Assemblage& asm_table, const MubFamily& bob_fam,
                         const CoherenceMeasure& measure, std::size_t k) {
    const auto avg = average_coherence_table(asm_table, bob_fam, measure);
    if (k >= avg.size()) throw std::invalid_argument("s_quantity_k_term: k out of range");
    double s = 0.0;
    for (std::size_t i = 0; i < avg.size(); ++i) {
        for (std::size_t j = 0; j < avg.size(); ++j) {
            if (i != j && i != k && j != k) s += avg[i][k] * avg[j][k];
        }
    }
    return s;
}

NaqcReport s_report(const Assemblage& asm_table, const MubFamily& bob_fam,
                    const CoherenceMeasure& measure) {
    const auto avg = average_coherence_table(asm_table, bob_fam, measure);
    NaqcReport rep;
    rep.measure = measure;
    rep.dim = asm_table.dim;
    for (IndexPattern p : {IndexPattern::Distinct, IndexPattern::IEqualsJ,
                           IndexPattern::INeqJEqualsK, IndexPattern::IEqualsKNeqJ,
                           IndexPattern::Full}) {
        rep.pattern_values[p] = pattern_sum(avg, p);
    }
    rep.s_value = rep.pattern_values[IndexPattern::Distinct];

    const std::size_t d = rep.dim;
    if (d == 2) {
        rep.bounds.lhs = bound(BoundKind::LHS, d, measure);
        rep.bounds.sqi = bound(BoundKind::SQI1, d, measure);
        rep.bounds.quantum = bound(BoundKind::Quantum, d, measure);
        rep.bounds.full_pattern = bound(BoundKind::FullPattern, d, measure);
    } else if (measure.kind == MeasureKind::L1 && measure.normalized) {
        rep.bounds.lhs = bound(BoundKind::LHS, d, measure);
        rep.bounds.sqi = bound(BoundKind::SQI1, d, measure);
        rep.bounds.quantum = bound(BoundKind::Quantum, d, measure);
    }
    return rep;
}

double bound(BoundKind kind, std::size_t dim, const CoherenceMeasure& measure) {
    if (dim < 2) throw std::invalid_argument("bound: dimension must be >= 2");
    if (dim == 2) {
        const double om = omega(measure, 2).value;  // 2 for both qubit measures
        switch (kind) {
            case BoundKind::LHS: return 2.0 * om;
            case BoundKind::SQI1: return 3.0 * om;
            case BoundKind::Quantum: return 6.0;
            case BoundKind::FullPattern: return 9.0 * om;
        }
    }
    if (measure.kind != MeasureKind::L1 || !measure.normalized) {
        throw std::invalid_argument(
            "bound: for d > 2 bounds are established only for the normalized l1 measure");
    }
    const double d = static_cast<double>(dim);
    switch (kind) {
        case BoundKind::LHS: return d * d * (d - 1.0);
        case BoundKind::SQI1: return d * (d * d - 1.0);
        case BoundKind::Quantum: return d * (d * d - 1.0);
        case BoundKind::FullPattern:
            throw std::invalid_argument("bound: full-pattern bound is established only for qubits");
    }
    throw std::invalid_argument("bound: bad kind");
}

double bound(IndexPattern pattern, std::size_t dim, const CoherenceMeasure& measure) {
    if (dim != 2) {
        throw std::invalid_argument("bound: pattern bounds are established only for qubits");
    }
    const double om = omega(measure, 2).value;
    switch (pattern) {
        case IndexPattern::IEqualsJ: return 3.0 * om;
        case IndexPattern::Distinct:
        case IndexPattern::INeqJEqualsK:
        case IndexPattern::IEqualsKNeqJ: return 2.0 * om;
        case IndexPattern::Full: return 9.0 * om;
    }
    throw std::invalid_argument("bound: bad pattern");
}

double f_sum(const std::vector<std::vector<double>>& responses, std::size_t k_excluded,
             std::size_t d) {
    if (responses.size() != d + 1) {
        throw std::invalid_argument("f_sum: response table must cover d+1 bases");
    }
    if (k_excluded > d) throw std::invalid_argument("f_sum: excluded index out of range");
    double s = 0.0;
    for (std::size_t i = 0; i <= d; ++i) {
        if (i == k_excluded) continue;
        for (double pa : responses[i]) s += pa * pa;
    }
    return s;
}

}  // namespace naqc
