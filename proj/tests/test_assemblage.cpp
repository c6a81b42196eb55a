#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "naqc/assemblage.hpp"
#include "naqc/oracle.hpp"
#include "support/brute.hpp"

using namespace naqc;

namespace {

const MubFamily& canonical() {
    static const MubFamily fam = rotated_qubit_mubs(0.0, 0.0);
    return fam;
}

BlochVector conditional_bloch(const Assemblage& asm_table, std::size_t x, std::size_t a) {
    const double p = asm_table.p[x][a];
    REQUIRE(p > 1e-12);
    return state_to_bloch(DensityMatrix(asm_table.sigma[x][a] * cx{1.0 / p, 0.0}));
}

}  // namespace

TEST_CASE("steering the Werner family anti-aligns Bob with Alice's axis") {
    for (double p_w : {0.5, 0.9}) {
        CAPTURE(p_w);
        const Assemblage asm_table = steer(werner_state(p_w), canonical());
        // z measurement is basis index 2 in the (x, y, z) ordering
        CHECK(asm_table.p[2][0] == doctest::Approx(0.5).epsilon(1e-12));
        const BlochVector r = conditional_bloch(asm_table, 2, 0);
        CHECK(r.r1 == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(r.r2 == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(r.r3 == doctest::Approx(-p_w).epsilon(1e-12));
    }
}

TEST_CASE("product states steer nothing: every conditional is |+>") {
    const Assemblage asm_table = steer(product_zero_plus_state(), canonical());
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t a = 0; a < 2; ++a) {
            if (asm_table.p[x][a] < 1e-12) continue;  // z outcome 1 never fires
            const BlochVector r = conditional_bloch(asm_table, x, a);
            CHECK(r.r1 == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(r.r2) < 1e-12);
            CHECK(std::abs(r.r3) < 1e-12);
        }
    }
}

TEST_CASE("Werner marginals are setting-independent and maximally mixed") {
    for (double p_w : {0.0, 0.4, 1.0}) {
        const Assemblage asm_table = steer(werner_state(p_w), canonical());
        for (std::size_t x = 0; x < 3; ++x) {
            const ComplexMatrix marginal = asm_table.sigma[x][0] + asm_table.sigma[x][1];
            CHECK(marginal.max_abs_diff(ComplexMatrix::identity(2) * cx{0.5, 0.0}) < 1e-12);
        }
        CHECK(validate(asm_table, ValidationMode::Strict).ok);
    }
}

TEST_CASE("steer matches the index-level reference implementation") {
    SplitMix64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = (trial % 2 == 0) ? 2 : 3;
        const DensityMatrix rho = random_state(d * d, StateKind::GinibreMixed, rng).with_dims(d, d);
        const MubFamily fam = (d == 2) ? rotated_qubit_mubs(1.0, 0.5) : mubs_prime_power(3);
        const Assemblage lib = steer(rho, fam);
        const Assemblage ref = naqc_brute::brute_steer(rho, fam.bases);
        for (std::size_t x = 0; x < lib.settings; ++x) {
            for (std::size_t a = 0; a < lib.outcomes; ++a) {
                CHECK(lib.sigma[x][a].max_abs_diff(ref.sigma[x][a]) < 1e-12);
            }
        }
    }
}

TEST_CASE("steer validates dimensions") {
    const DensityMatrix untagged(ComplexMatrix::identity(4) * cx{0.25, 0.0});
    CHECK_THROWS_AS(steer(untagged, canonical()), std::invalid_argument);

    const DensityMatrix tagged = untagged.with_dims(2, 2);
    CHECK_THROWS_AS(steer(tagged, mubs_prime_power(3)), std::invalid_argument);
}

TEST_CASE("one-point LHS ensemble reproduces product-state steering") {
    ModelEnsemble model;
    model.kind = ModelKind::LHS;
    model.weights = {1.0};
    model.responses.resize(1);
    const DensityMatrix alice = bloch_to_state(BlochVector{0.0, 0.0, 1.0});
    for (const Basis& b : canonical().bases) {
        std::vector<double> row(2);
        for (std::size_t a = 0; a < 2; ++a) {
            row[a] = (b.projector(a) * alice.mat()).trace().real();
        }
        model.responses[0].push_back(std::move(row));
    }
    model.states.push_back({bloch_to_state(BlochVector{1.0, 0.0, 0.0})});

    const Assemblage realized = realize(model, 3);
    const Assemblage steered = steer(product_zero_plus_state(), canonical());
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t a = 0; a < 2; ++a) {
            CHECK(realized.sigma[x][a].max_abs_diff(steered.sigma[x][a]) < 1e-12);
        }
    }
}

TEST_CASE("uniform Pauli-eigenstate LHS ensemble is strictly valid") {
    ModelEnsemble model;
    model.kind = ModelKind::LHS;
    const double w = 1.0 / 6.0;
    for (int axis = 1; axis <= 3; ++axis) {
        for (double sign : {1.0, -1.0}) {
            model.weights.push_back(w);
            BlochVector r{0, 0, 0};
            (axis == 1 ? r.r1 : axis == 2 ? r.r2 : r.r3) = sign;
            model.states.push_back({bloch_to_state(r)});
            // deterministic responses keyed on the hidden sign
            std::vector<std::vector<double>> rows(3, std::vector<double>(2, 0.0));
            for (auto& row : rows) row[sign > 0 ? 0 : 1] = 1.0;
            model.responses.push_back(std::move(rows));
        }
    }
    const Assemblage asm_table = realize(model, 3);
    const AssemblageReport rep = validate(asm_table, ValidationMode::Strict);
    CHECK(rep.ok);
    for (std::size_t x = 0; x < 3; ++x) {
        const ComplexMatrix marginal = asm_table.sigma[x][0] + asm_table.sigma[x][1];
        CHECK(marginal.max_abs_diff(ComplexMatrix::identity(2) * cx{0.5, 0.0}) < 1e-12);
    }
}

TEST_CASE("outcome-dependent 1SQI states can signal across settings") {
    ModelEnsemble model;
    model.kind = ModelKind::SQI1;
    model.weights = {1.0};
    model.responses = {{{1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}}};
    model.states = {{bloch_to_state(BlochVector{0, 0, 1}), bloch_to_state(BlochVector{0, 0, -1})}};
    const Assemblage asm_table = realize(model, 3);

    const AssemblageReport strict = validate(asm_table, ValidationMode::Strict);
    CHECK_FALSE(strict.ok);
    CHECK(strict.max_signaling_dev > 0.5);
    const AssemblageReport sqi = validate(asm_table, ValidationMode::Sqi);
    CHECK(sqi.ok);
}

TEST_CASE("constant-state 1SQI ensembles leave every conditional in that state") {
    SplitMix64 rng(61);
    ModelEnsemble model;
    model.kind = ModelKind::SQI1;
    model.weights = {0.25, 0.75};
    const DensityMatrix zero = bloch_to_state(BlochVector{0, 0, 1});
    for (int lam = 0; lam < 2; ++lam) {
        std::vector<std::vector<double>> rows;
        for (int x = 0; x < 3; ++x) {
            const double u = rng.next_double();
            rows.push_back({u, 1.0 - u});
        }
        model.responses.push_back(std::move(rows));
        model.states.push_back({zero, zero});
    }
    const Assemblage asm_table = realize(model, 3);
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t a = 0; a < 2; ++a) {
            if (asm_table.p[x][a] < 1e-12) continue;
            const BlochVector r = conditional_bloch(asm_table, x, a);
            CHECK(r.r3 == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("validator reports a broken normalization with its deviation") {
    Assemblage handmade;
    handmade.dim = 2;
    handmade.settings = 2;
    handmade.outcomes = 2;
    const ComplexMatrix half = ComplexMatrix::identity(2) * cx{0.25, 0.0};
    handmade.sigma = {{half, half}, {half, half * cx{0.8, 0.0}}};
    handmade.recompute_probabilities();
    const AssemblageReport rep = validate(handmade, ValidationMode::Strict);
    CHECK_FALSE(rep.ok);
    CHECK(rep.max_normalization_dev == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("realize rejects incomplete and ragged response tables") {
    ModelEnsemble model;
    model.kind = ModelKind::LHS;
    model.weights = {1.0};
    model.responses = {{{0.5, 0.5}, {1.0, 0.0}}};  // only 2 settings
    model.states.push_back({bloch_to_state(BlochVector{0, 0, 1})});
    CHECK_THROWS_AS(realize(model, 3), std::invalid_argument);

    model.responses = {{{0.5, 0.5}, {1.0, 0.0}, {0.5}}};
    CHECK_THROWS_AS(realize(model, 3), std::invalid_argument);
}

TEST_CASE("random quantum steering always passes strict validation") {
    SplitMix64 rng(67);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t d = (trial % 2 == 0) ? 2 : 3;
        const StateKind kind = (rng.next_u64() & 1) ? StateKind::HaarPure : StateKind::GinibreMixed;
        const DensityMatrix rho = random_state(d * d, kind, rng).with_dims(d, d);
        const MubFamily fam = (d == 2) ? canonical() : mubs_prime_power(3);
        CHECK(validate(steer(rho, fam), ValidationMode::Strict).ok);
    }
}

TEST_CASE("random LHS ensembles always pass strict validation") {
    for (int trial = 0; trial < 1000; ++trial) {
        SplitMix64 rng(3000 + trial);
        const ModelEnsemble model = random_ensemble(ModelKind::LHS, 2, 3, rng);
        CHECK(validate(realize(model, 3), ValidationMode::Strict).ok);
    }
}

TEST_CASE("random 1SQI ensembles pass the relaxed validation") {
    for (int trial = 0; trial < 1000; ++trial) {
        SplitMix64 rng(4000 + trial);
        const ModelEnsemble model = random_ensemble(ModelKind::SQI1, 2, 3, rng);
        CHECK(validate(realize(model, 3), ValidationMode::Sqi).ok);
    }
}

TEST_CASE("steering is linear in the state") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho1 = random_state(4, StateKind::GinibreMixed, rng).with_dims(2, 2);
        const DensityMatrix rho2 = random_state(4, StateKind::HaarPure, rng).with_dims(2, 2);
        const double p = rng.next_double();
        const DensityMatrix mix(rho1.mat() * cx{p, 0.0} + rho2.mat() * cx{1.0 - p, 0.0}, 2, 2);
        const Assemblage mixed = steer(mix, canonical());
        const Assemblage a1 = steer(rho1, canonical());
        const Assemblage a2 = steer(rho2, canonical());
        for (std::size_t x = 0; x < 3; ++x) {
            for (std::size_t a = 0; a < 2; ++a) {
                const ComplexMatrix combo =
                    a1.sigma[x][a] * cx{p, 0.0} + a2.sigma[x][a] * cx{1.0 - p, 0.0};
                CHECK(mixed.sigma[x][a].max_abs_diff(combo) < 1e-10);
            }
        }
    }
}
