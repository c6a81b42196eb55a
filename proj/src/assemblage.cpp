#include "naqc/assemblage.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace naqc {

void Assemblage::recompute_probabilities() {
    p.assign(settings, std::vector<double>(outcomes, 0.0));
    for (std::size_t x = 0; x < settings; ++x) {
        for (std::size_t a = 0; a < outcomes; ++a) {
            p[x][a] = sigma[x][a].trace().real();
        }
    }
}

Assemblage steer(const DensityMatrix& rho_ab, const std::vector<Basis>& alice_bases) {
    if (alice_bases.empty()) throw std::invalid_argument("steer: no measurement bases");
    const auto [da, db] = rho_ab.dims();
    for (const Basis& b : alice_bases) {
        if (b.dim != da) {
            throw std::invalid_argument("steer: basis dimension does not match Alice's subsystem");
        }
    }

    Assemblage out;
    out.dim = db;
    out.settings = alice_bases.size();
    out.outcomes = da;
    out.sigma.resize(out.settings);
    const ComplexMatrix eye_b = ComplexMatrix::identity(db);
    for (std::size_t x = 0; x < out.settings; ++x) {
        out.sigma[x].reserve(da);
        for (std::size_t a = 0; a < da; ++a) {
            const ComplexMatrix op = kron(alice_bases[x].projector(a), eye_b) * rho_ab.mat();
            // partial trace over A of op
            ComplexMatrix sig(db, db);
            for (std::size_t i = 0; i < db; ++i) {
                for (std::size_t j = 0; j < db; ++j) {
                    cx acc{0.0, 0.0};
                    for (std::size_t k = 0; k < da; ++k) acc += op(k * db + i, k * db + j);
                    sig(i, j) = acc;
                }
            }
            out.sigma[x].push_back(std::move(sig));
        }
    }
    out.recompute_probabilities();
    return out;
}

Assemblage steer(const DensityMatrix& rho_ab, const MubFamily& alice_bases) {
    return steer(rho_ab, alice_bases.bases);
}

Assemblage realize(const ModelEnsemble& model, std::size_t settings) {
    if (model.weights.empty() || model.weights.size() != model.responses.size() ||
        model.weights.size() != model.states.size()) {
        throw std::invalid_argument("realize: ensemble tables have mismatched sizes");
    }
    const std::size_t d = model.states.front().front().dim();
    std::size_t outcomes = 0;
    for (std::size_t lam = 0; lam < model.weights.size(); ++lam) {
        if (model.responses[lam].size() < settings) {
            throw std::invalid_argument("realize: response table incomplete for setting count " +
                                        std::to_string(settings));
        }
        for (std::size_t x = 0; x < settings; ++x) {
            if (outcomes == 0) outcomes = model.responses[lam][x].size();
            if (model.responses[lam][x].size() != outcomes) {
                throw std::invalid_argument("realize: ragged response table");
            }
        }
        const std::size_t want = (model.kind == ModelKind::LHS) ? 1 : outcomes;
        if (model.states[lam].size() != want) {
            throw std::invalid_argument("realize: state table size does not match model kind");
        }
    }

    Assemblage out;
    out.dim = d;
    out.settings = settings;
    out.outcomes = outcomes;
    out.sigma.assign(settings, std::vector<ComplexMatrix>(outcomes, ComplexMatrix(d, d)));
    for (std::size_t lam = 0; lam < model.weights.size(); ++lam) {
        for (std::size_t x = 0; x < settings; ++x) {
            for (std::size_t a = 0; a < outcomes; ++a) {
                const double w = model.weights[lam] * model.responses[lam][x][a];
                if (w == 0.0) continue;
                const ComplexMatrix& st = (model.kind == ModelKind::LHS)
                                              ? model.states[lam][0].mat()
                                              : model.states[lam][a].mat();
                out.sigma[x][a] = out.sigma[x][a] + st * cx{w, 0.0};
            }
        }
    }
    out.recompute_probabilities();
    return out;
}

AssemblageReport validate(const Assemblage& asm_table, ValidationMode mode) {
    AssemblageReport rep;
    for (std::size_t x = 0; x < asm_table.settings; ++x) {
        double psum = 0.0;
        for (std::size_t a = 0; a < asm_table.outcomes; ++a) {
            const ComplexMatrix& sig = asm_table.sigma[x][a];
            rep.max_hermiticity_defect =
                std::max(rep.max_hermiticity_defect, sig.hermiticity_defect());
            if (sig.hermiticity_defect() <= 1e-6) {
                const EigResult eig = eig_hermitian(sig, 1e-6);
                rep.max_negative_eigenvalue =
                    std::max(rep.max_negative_eigenvalue, std::max(0.0, -eig.values.back()));
            }
            psum += asm_table.p[x][a];
        }
        rep.max_normalization_dev = std::max(rep.max_normalization_dev, std::abs(psum - 1.0));
    }
    if (mode == ValidationMode::Strict && asm_table.settings > 1) {
        // marginal sum_a sigma_{a|x} must be setting-independent
        std::vector<ComplexMatrix> marginals;
        for (std::size_t x = 0; x < asm_table.settings; ++x) {
            ComplexMatrix m(asm_table.dim, asm_table.dim);
            for (std::size_t a = 0; a < asm_table.outcomes; ++a) {
                m = m + asm_table.sigma[x][a];
            }
            marginals.push_back(std::move(m));
        }
        for (std::size_t x = 1; x < marginals.size(); ++x) {
            rep.max_signaling_dev =
                std::max(rep.max_signaling_dev, marginals[x].max_abs_diff(marginals[0]));
        }
    }
    rep.ok = rep.max_hermiticity_defect <= 1e-9 && rep.max_negative_eigenvalue <= 1e-9 &&
             rep.max_normalization_dev <= 1e-9 &&
             (mode == ValidationMode::Sqi || rep.max_signaling_dev <= 1e-8);
    return rep;
}

}  // namespace naqc
