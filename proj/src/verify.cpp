#include "naqc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "naqc/coherence.hpp"
#include "naqc/naqc.hpp"
#include "naqc/oracle.hpp"

namespace naqc {

namespace {

CheckResult check_max(std::string name, double observed, double limit,
                      std::optional<std::uint64_t> seed = std::nullopt) {
    CheckResult c;
    c.name = std::move(name);
    c.observed = observed;
    c.limit = limit;
    c.ok = observed <= limit;
    c.failing_seed = seed;
    return c;
}

SuiteReport suite_coherence(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"coherence", trials, seed, false, {}, {}};
    const MubFamily fam = rotated_qubit_mubs(0.0, 0.0);
    for (const auto& [label, measure] :
         {std::pair{"l1", CoherenceMeasure::l1()},
          std::pair{"relent", CoherenceMeasure::relative_entropy()}}) {
        double worst = 0.0;
        std::uint64_t worst_seed = seed;
        for (std::size_t t = 0; t < trials; ++t) {
            SplitMix64 rng(seed + t);
            const StateKind kind =
                (rng.next_u64() & 1) != 0 ? StateKind::HaarPure : StateKind::GinibreMixed;
            const DensityMatrix rho = random_state(2, kind, rng);
            const double sum = complementarity_sum(rho, fam, measure);
            if (sum > worst) {
                worst = sum;
                worst_seed = seed + t;
            }
        }
        rep.checks.push_back(check_max(std::string("qubit_complementarity_") + label, worst,
                                       2.0 + 1e-9, worst_seed));
        // saturation witness: a basis state reaches the ceiling
        const DensityMatrix basis_state = bloch_to_state(BlochVector{0.0, 0.0, 1.0});
        const double sat = complementarity_sum(basis_state, fam, measure);
        rep.checks.push_back(check_max(std::string("saturation_defect_") + label,
                                       std::abs(sat - 2.0), 1e-12));
    }
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.ok; });
    return rep;
}

SuiteReport suite_models(const std::string& name, ModelKind kind, std::size_t trials,
                         std::uint64_t seed) {
    SuiteReport rep{name, trials, seed, false, {}, {}};
    const double limit = (kind == ModelKind::LHS) ? 4.0 : 6.0;
    const std::string kind_name = (kind == ModelKind::LHS) ? "lhs" : "sqi1";
    for (const auto& [label, measure] :
         {std::pair{"l1", CoherenceMeasure::l1()},
          std::pair{"relent", CoherenceMeasure::relative_entropy()}}) {
        const SweepResult sweep = sweep_models(kind, 2, trials, seed, measure);
        rep.checks.push_back(check_max(name + "_max_s_" + label, sweep.max_s, limit + 1e-9,
                                       sweep.argmax_seed));
        rep.sweeps.push_back(SweepSummary{kind_name, 2, trials, seed, sweep.max_s});
    }
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.ok; });
    return rep;
}

SuiteReport suite_quantum(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"quantum", trials, seed, false, {}, {}};
    for (const auto& [label, measure] :
         {std::pair{"l1", CoherenceMeasure::l1()},
          std::pair{"relent", CoherenceMeasure::relative_entropy()}}) {
        const QuantumSweepResult sweep = sweep_quantum_states(trials, seed, measure);
        rep.checks.push_back(
            check_max(std::string("quantum_max_s_") + label, sweep.max_s, 6.0 + 1e-6,
                      sweep.argmax_seed));
        rep.sweeps.push_back(SweepSummary{"quantum", 2, trials, seed, sweep.max_s});
    }
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.ok; });
    return rep;
}

SuiteReport suite_qudit(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"qudit", trials, seed, false, {}, {}};
    const MubFamily fam = mubs_prime_power(3);
    const CoherenceMeasure l1n = CoherenceMeasure::l1(true);

    // purity-resolved complementarity ceiling in d = 3
    double worst_excess = -1.0;
    std::uint64_t worst_seed = seed;
    const std::size_t e1_trials = std::min<std::size_t>(trials, 10000);
    for (std::size_t t = 0; t < e1_trials; ++t) {
        SplitMix64 rng(seed + t);
        const StateKind kind =
            (rng.next_u64() & 1) != 0 ? StateKind::HaarPure : StateKind::GinibreMixed;
        const DensityMatrix rho = random_state(3, kind, rng);
        const double sum = complementarity_sum(rho, fam, l1n);
        const double purity_bound = 3.0 * (3.0 * rho.purity() - 1.0) / 2.0;
        const double excess = sum - purity_bound;
        if (excess > worst_excess) {
            worst_excess = excess;
            worst_seed = seed + t;
        }
    }
    rep.checks.push_back(
        check_max("qutrit_purity_ceiling_excess", worst_excess, 1e-9, worst_seed));

    const std::size_t sweep_trials = std::min<std::size_t>(trials, 10000);
    const SweepResult lhs = sweep_models(ModelKind::LHS, 3, sweep_trials, seed, l1n);
    rep.checks.push_back(check_max("qutrit_lhs_max_s", lhs.max_s, 18.0 + 1e-9, lhs.argmax_seed));
    rep.sweeps.push_back(SweepSummary{"lhs", 3, sweep_trials, seed, lhs.max_s});
    const SweepResult sqi = sweep_models(ModelKind::SQI1, 3, sweep_trials, seed, l1n);
    rep.checks.push_back(check_max("qutrit_sqi_max_s", sqi.max_s, 24.0 + 1e-9, sqi.argmax_seed));
    rep.sweeps.push_back(SweepSummary{"sqi1", 3, sweep_trials, seed, sqi.max_s});

    // response-concentration sum over any d of the d+1 bases
    double worst_f = 0.0;
    std::uint64_t worst_f_seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 rng(seed + t);
        const DensityMatrix rho = random_state(3, StateKind::HaarPure, rng);
        std::vector<std::vector<double>> responses(fam.bases.size());
        for (std::size_t x = 0; x < fam.bases.size(); ++x) {
            responses[x].resize(3);
            for (std::size_t a = 0; a < 3; ++a) {
                responses[x][a] = (fam.bases[x].projector(a) * rho.mat()).trace().real();
            }
        }
        for (std::size_t k = 0; k <= 3; ++k) {
            const double f = f_sum(responses, k, 3);
            if (f > worst_f) {
                worst_f = f;
                worst_f_seed = seed + t;
            }
        }
    }
    rep.checks.push_back(check_max("qutrit_f_sum", worst_f, 2.0 + 1e-9, worst_f_seed));

    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.ok; });
    return rep;
}

SuiteReport suite_mub(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"mub", trials, seed, false, {}, {}};
    for (std::size_t d : {2, 3, 4, 5, 7, 8, 9, 25}) {
        const UnbiasednessReport unb = verify_unbiased(mubs_prime_power(d));
        rep.checks.push_back(
            check_max("mub_deviation_d" + std::to_string(d), unb.max_deviation, 1e-9));
    }
    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.ok; });
    return rep;
}

SuiteReport suite_f(std::size_t trials, std::uint64_t seed) {
    SuiteReport rep{"f", trials, seed, false, {}, {}};
    const MubFamily fam = rotated_qubit_mubs(0.0, 0.0);
    auto born_rows = [&](const DensityMatrix& rho) {
        std::vector<std::vector<double>> responses(3, std::vector<double>(2));
        for (std::size_t x = 0; x < 3; ++x) {
            for (std::size_t a = 0; a < 2; ++a) {
                responses[x][a] = (fam.bases[x].projector(a) * rho.mat()).trace().real();
            }
        }
        return responses;
    };

    double worst = 0.0;
    std::uint64_t worst_seed = seed;
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 rng(seed + t);
        const StateKind kind =
            (rng.next_u64() & 1) != 0 ? StateKind::HaarPure : StateKind::GinibreMixed;
        const auto responses = born_rows(random_state(2, kind, rng));
        for (std::size_t k = 0; k < 3; ++k) {
            const double f = f_sum(responses, k, 2);
            if (f > worst) {
                worst = f;
                worst_seed = seed + t;
            }
        }
    }
    rep.checks.push_back(check_max("qubit_f_sum", worst, 1.5 + 1e-12, worst_seed));

    // saturation: a sigma_2 eigenstate excluding the x basis reaches 3/2
    const DensityMatrix y_up = bloch_to_state(BlochVector{0.0, 1.0, 0.0});
    const double sat = f_sum(born_rows(y_up), 0, 2);
    rep.checks.push_back(check_max("qubit_f_saturation_defect", std::abs(sat - 1.5), 1e-12));

    rep.ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                         [](const CheckResult& c) { return c.ok; });
    return rep;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"coherence", "lhs", "sqi", "quantum", "qudit", "mub", "f"};
}

SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("run_suite: trials must be >= 1");
    if (name == "coherence") return suite_coherence(trials, seed);
    if (name == "lhs") return suite_models("lhs", ModelKind::LHS, trials, seed);
    if (name == "sqi") return suite_models("sqi", ModelKind::SQI1, trials, seed);
    if (name == "quantum") return suite_quantum(trials, seed);
    if (name == "qudit") return suite_qudit(trials, seed);
    if (name == "mub") return suite_mub(trials, seed);
    if (name == "f") return suite_f(trials, seed);
    throw std::invalid_argument("run_suite: unknown suite '" + name +
                                "' (expected coherence, lhs, sqi, quantum, qudit, mub or f)");
}

}  // namespace naqc
