// The steering functional S: sums of products of average conditional-state
// coherences across MUB triples, its index-pattern decomposition, the
// auxiliary F sums, and the LHS / 1SQI / quantum bounds.
#ifndef NAQC_NAQC_HPP
#define NAQC_NAQC_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "naqc/assemblage.hpp"
#include "naqc/coherence.hpp"
#include "naqc/mub.hpp"

namespace naqc {

// Constraint on the (i, j, k) basis-triple sum. The first four patterns
// partition all triples; Full is their union.
enum class IndexPattern {
    Distinct,      // i != j != k != i  (the steering functional S)
    IEqualsJ,      // i == j, k free
    INeqJEqualsK,  // j == k, i != j
    IEqualsKNeqJ,  // i == k, j != i
    Full,          // unrestricted
};

std::string pattern_name(IndexPattern pattern);
IndexPattern parse_pattern(const std::string& name);  // throws on unknown name

struct NaqcBounds {
    std::optional<double> lhs;
    std::optional<double> sqi;
    std::optional<double> quantum;
    std::optional<double> full_pattern;
};

struct NaqcReport {
    double s_value = 0.0;  // always the Distinct pattern value
    std::map<IndexPattern, double> pattern_values;
    CoherenceMeasure measure;
    std::size_t dim = 2;
    NaqcBounds bounds;
    std::optional<double> theta;  // set when produced through the optimizer
    std::optional<double> phi;
};

// Average coherence table A[i][k] = sum_a p(a|i) C_k(rho'_{a|i}); outcomes
// with p < 1e-12 contribute nothing. Exposed for reuse by per-pattern sums.
std::vector<std::vector<double>> average_coherence_table(const Assemblage& asm_table,
                                                         const MubFamily& bob_fam,
                                                         const CoherenceMeasure& measure);

double s_quantity(const Assemblage& asm_table, const MubFamily& bob_fam,
                  const CoherenceMeasure& measure,
                  IndexPattern pattern = IndexPattern::Distinct);

// The k-fixed slice of the Distinct sum: pairs (i, j) with i != j, both != k.
double s_quantity_k_term(const Assemblage& asm_table, const MubFamily& bob_fam,
                         const CoherenceMeasure& measure, std::size_t k);

NaqcReport s_report(const Assemblage& asm_table, const MubFamily& bob_fam,
                    const CoherenceMeasure& measure);

enum class BoundKind { LHS, SQI1, Quantum, FullPattern };

// Qubit values: LHS 4, 1SQI 6, quantum 6, full pattern 18 (both measures).
// General d (normalized l1 only): LHS d^2(d-1), 1SQI and quantum d(d^2-1).
double bound(BoundKind kind, std::size_t dim, const CoherenceMeasure& measure);

// Per-pattern ceilings for qubits: 6 for IEqualsJ, 4 for the other three
// disjoint patterns, 18 for Full.
double bound(IndexPattern pattern, std::size_t dim, const CoherenceMeasure& measure);

// sum_a sum_{i != k_excluded} p(a|i)^2 over the d+1-basis response table of
// one hidden variable; bounded by 3/2 for qubits, (d+1)/2 in general.
double f_sum(const std::vector<std::vector<double>>& responses, std::size_t k_excluded,
             std::size_t d);

}  // namespace naqc

#endif  // NAQC_NAQC_HPP
