// Bob's conditional-state assemblage: built from a bipartite state plus
// Alice's projective measurements, or realized from an explicit LHS / 1SQI
// hidden-variable ensemble.
#ifndef NAQC_ASSEMBLAGE_HPP
#define NAQC_ASSEMBLAGE_HPP

#include <cstddef>
#include <vector>

#include "naqc/mub.hpp"
#include "naqc/qmatrix.hpp"

namespace naqc {

struct Assemblage {
    std::size_t dim = 0;       // Bob's dimension
    std::size_t settings = 0;  // measurement settings x
    std::size_t outcomes = 0;  // outcomes a per setting
    std::vector<std::vector<ComplexMatrix>> sigma;  // [x][a], unnormalized
    std::vector<std::vector<double>> p;             // [x][a] = trace(sigma[x][a])

    void recompute_probabilities();
};

enum class ModelKind { LHS, SQI1 };

// Explicit hidden-variable model. For LHS the state table holds one state
// per lambda; for SQI1 it holds one state per (lambda, outcome).
struct ModelEnsemble {
    ModelKind kind = ModelKind::LHS;
    std::vector<double> weights;                           // P_lambda, sums to 1
    std::vector<std::vector<std::vector<double>>> responses;  // [lambda][x][a]
    std::vector<std::vector<DensityMatrix>> states;        // [lambda][1] or [lambda][a]
};

// sigma_{a|x} = Tr_A[(Pi_{a|x} (x) I) rho_ab] for rank-1 projective
// measurements onto the basis vectors.
Assemblage steer(const DensityMatrix& rho_ab, const std::vector<Basis>& alice_bases);
Assemblage steer(const DensityMatrix& rho_ab, const MubFamily& alice_bases);

// sigma_{a|x} = sum_lambda P_lambda p(a|x,lambda) rho_{lambda(,a)}
Assemblage realize(const ModelEnsemble& model, std::size_t settings);

enum class ValidationMode { Strict, Sqi };  // Sqi skips the no-signaling check

struct AssemblageReport {
    double max_hermiticity_defect = 0.0;
    double max_negative_eigenvalue = 0.0;  // most negative eigenvalue, as magnitude
    double max_normalization_dev = 0.0;    // |sum_a p(a|x) - 1|
    double max_signaling_dev = 0.0;        // entrywise across settings (strict only)
    bool ok = false;
};

AssemblageReport validate(const Assemblage& asm_table, ValidationMode mode);

}  // namespace naqc

#endif  // NAQC_ASSEMBLAGE_HPP
