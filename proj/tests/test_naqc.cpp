#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "naqc/naqc.hpp"
#include "naqc/oracle.hpp"
#include "support/brute.hpp"

using namespace naqc;

namespace {

const MubFamily& canonical() {
    static const MubFamily fam = rotated_qubit_mubs(0.0, 0.0);
    return fam;
}

Assemblage werner_assemblage(double p_w) { return steer(werner_state(p_w), canonical()); }

}  // namespace

TEST_CASE("Werner curve: S equals 6 p^2 at the canonical frame") {
    for (const auto& [p_w, expected] :
         {std::pair{0.0, 0.0}, std::pair{0.5, 1.5}, std::pair{1.0, 6.0}}) {
        CAPTURE(p_w);
        const double s =
            s_quantity(werner_assemblage(p_w), canonical(), CoherenceMeasure::l1());
        CHECK(s == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("the singlet reaches 6 for the relative entropy too") {
    const double s = s_quantity(werner_assemblage(1.0), canonical(),
                                CoherenceMeasure::relative_entropy());
    CHECK(s == doctest::Approx(6.0).epsilon(1e-10));
    // intermediate mixing follows 6 (1 - H((1+p)/2))^2
    const double p = 0.8;
    const double expected = 6.0 * std::pow(1.0 - binary_entropy((1.0 + p) / 2.0), 2);
    CHECK(s_quantity(werner_assemblage(p), canonical(), CoherenceMeasure::relative_entropy()) ==
          doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("the unsteerable product state sits exactly on the LHS ceiling") {
    const Assemblage asm_table = steer(product_zero_plus_state(), canonical());
    CHECK(s_quantity(asm_table, canonical(), CoherenceMeasure::l1()) ==
          doctest::Approx(4.0).epsilon(1e-12));
    CHECK(s_quantity(asm_table, canonical(), CoherenceMeasure::relative_entropy()) ==
          doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("singlet pattern breakdown") {
    const NaqcReport rep =
        s_report(werner_assemblage(1.0), canonical(), CoherenceMeasure::l1());
    CHECK(rep.s_value == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(rep.pattern_values.at(IndexPattern::Distinct) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(rep.pattern_values.at(IndexPattern::IEqualsJ) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(rep.pattern_values.at(IndexPattern::INeqJEqualsK) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.pattern_values.at(IndexPattern::IEqualsKNeqJ) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(rep.pattern_values.at(IndexPattern::Full) == doctest::Approx(12.0).epsilon(1e-12));
    CHECK(rep.bounds.lhs == doctest::Approx(4.0));
    CHECK(rep.bounds.sqi == doctest::Approx(6.0));
    CHECK(rep.bounds.quantum == doctest::Approx(6.0));
    CHECK(rep.bounds.full_pattern == doctest::Approx(18.0));
}

TEST_CASE("maximally mixed input scores zero in every pattern") {
    const DensityMatrix mixed(ComplexMatrix::identity(4) * cx{0.25, 0.0}, 2, 2);
    const NaqcReport rep =
        s_report(steer(mixed, canonical()), canonical(), CoherenceMeasure::l1());
    for (const auto& [pattern, value] : rep.pattern_values) CHECK(value == 0.0);
}

TEST_CASE("product state full-pattern value, frozen from the brute-force oracle") {
    // The oracle quadruple sum gives 18 = 9 * sum_k C_k^2(|+>) here: every
    // conditional state is |+> so each of the 9 (i, j) pairs contributes
    // C_k^2 summed over k. This also saturates the universal full bound.
    const Assemblage asm_table = steer(product_zero_plus_state(), canonical());
    const double brute =
        naqc_brute::brute_s(asm_table, canonical(), CoherenceMeasure::l1(), IndexPattern::Full);
    CHECK(brute == doctest::Approx(18.0).epsilon(1e-12));
    CHECK(s_quantity(asm_table, canonical(), CoherenceMeasure::l1(), IndexPattern::Full) ==
          doctest::Approx(brute).epsilon(1e-12));
}

TEST_CASE("library pattern sums match the brute-force oracle on random inputs") {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const StateKind kind = (rng.next_u64() & 1) ? StateKind::HaarPure : StateKind::GinibreMixed;
        const DensityMatrix rho = random_state(4, kind, rng).with_dims(2, 2);
        const MubFamily fam = rotated_qubit_mubs(3.1415 * rng.next_double(),
                                                 6.2831 * rng.next_double());
        const Assemblage asm_table = steer(rho, fam);
        const CoherenceMeasure measure =
            (trial % 2 == 0) ? CoherenceMeasure::l1() : CoherenceMeasure::relative_entropy();
        for (IndexPattern pattern :
             {IndexPattern::Distinct, IndexPattern::IEqualsJ, IndexPattern::INeqJEqualsK,
              IndexPattern::IEqualsKNeqJ, IndexPattern::Full}) {
            const double lib = s_quantity(asm_table, fam, measure, pattern);
            const double ref = naqc_brute::brute_s(asm_table, fam, measure, pattern);
            CHECK(std::abs(lib - ref) < 1e-9);
        }
    }
}

TEST_CASE("the four disjoint patterns always add up to the full sum") {
    SplitMix64 rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        const StateKind kind = (rng.next_u64() & 1) ? StateKind::HaarPure : StateKind::GinibreMixed;
        const DensityMatrix rho = random_state(4, kind, rng).with_dims(2, 2);
        const MubFamily fam = rotated_qubit_mubs(3.1415 * rng.next_double(),
                                                 6.2831 * rng.next_double());
        const NaqcReport rep = s_report(steer(rho, fam), fam, CoherenceMeasure::l1());
        const double parts = rep.pattern_values.at(IndexPattern::Distinct) +
                             rep.pattern_values.at(IndexPattern::IEqualsJ) +
                             rep.pattern_values.at(IndexPattern::INeqJEqualsK) +
                             rep.pattern_values.at(IndexPattern::IEqualsKNeqJ);
        CHECK(std::abs(parts - rep.pattern_values.at(IndexPattern::Full)) < 1e-9);
        CHECK(rep.s_value == rep.pattern_values.at(IndexPattern::Distinct));
        CHECK(rep.pattern_values.at(IndexPattern::Full) <= 18.0 + 1e-9);
        CHECK(rep.pattern_values.at(IndexPattern::IEqualsJ) <= 6.0 + 1e-9);
    }
}

TEST_CASE("a violating distinct pattern is compensated by the rest") {
    SplitMix64 rng(81);
    int violations = 0;
    for (int trial = 0; trial < 400; ++trial) {
        // bias toward strongly steerable inputs so violations actually occur
        const double p_w = 0.7 + 0.3 * rng.next_double();
        const NaqcReport rep =
            s_report(werner_assemblage(p_w), canonical(), CoherenceMeasure::l1());
        const DensityMatrix haar = random_state(4, StateKind::HaarPure, rng).with_dims(2, 2);
        const MubFamily fam = rotated_qubit_mubs(3.1415 * rng.next_double(),
                                                 6.2831 * rng.next_double());
        const NaqcReport rep2 = s_report(steer(haar, fam), fam, CoherenceMeasure::l1());
        for (const NaqcReport* r : {&rep, &rep2}) {
            if (r->pattern_values.at(IndexPattern::Distinct) > 4.0) {
                ++violations;
                const double rest = r->pattern_values.at(IndexPattern::IEqualsJ) +
                                    r->pattern_values.at(IndexPattern::INeqJEqualsK) +
                                    r->pattern_values.at(IndexPattern::IEqualsKNeqJ);
                CHECK(rest < 14.0);
                CHECK(r->pattern_values.at(IndexPattern::Full) <= 18.0 + 1e-9);
            }
        }
    }
    CHECK(violations > 100);  // the biased sampling must actually exercise the branch
}

TEST_CASE("k-slices partition the distinct sum") {
    SplitMix64 rng(83);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = random_state(4, StateKind::GinibreMixed, rng).with_dims(2, 2);
        const Assemblage asm_table = steer(rho, canonical());
        double total = 0.0;
        for (std::size_t k = 0; k < 3; ++k) {
            total += s_quantity_k_term(asm_table, canonical(), CoherenceMeasure::l1(), k);
        }
        CHECK(std::abs(total -
                       s_quantity(asm_table, canonical(), CoherenceMeasure::l1())) < 1e-10);
    }
}

TEST_CASE("bound table for qubits and qudits") {
    for (const CoherenceMeasure& m :
         {CoherenceMeasure::l1(), CoherenceMeasure::relative_entropy()}) {
        CHECK(bound(BoundKind::LHS, 2, m) == 4.0);
        CHECK(bound(BoundKind::SQI1, 2, m) == 6.0);
        CHECK(bound(BoundKind::Quantum, 2, m) == 6.0);
        CHECK(bound(BoundKind::FullPattern, 2, m) == 18.0);
        CHECK(bound(IndexPattern::IEqualsJ, 2, m) == 6.0);
        CHECK(bound(IndexPattern::Distinct, 2, m) == 4.0);
        CHECK(bound(IndexPattern::INeqJEqualsK, 2, m) == 4.0);
        CHECK(bound(IndexPattern::IEqualsKNeqJ, 2, m) == 4.0);
        CHECK(bound(IndexPattern::Full, 2, m) == 18.0);
    }
    const CoherenceMeasure l1n = CoherenceMeasure::l1(true);
    CHECK(bound(BoundKind::LHS, 3, l1n) == 18.0);
    CHECK(bound(BoundKind::SQI1, 3, l1n) == 24.0);
    CHECK(bound(BoundKind::Quantum, 3, l1n) == 24.0);
    CHECK(bound(BoundKind::LHS, 5, l1n) == 100.0);
    CHECK(bound(BoundKind::SQI1, 5, l1n) == 120.0);

    CHECK_THROWS_WITH_AS(bound(BoundKind::Quantum, 3, CoherenceMeasure::relative_entropy()),
                         doctest::Contains("established"), std::invalid_argument);
    CHECK_THROWS_AS(bound(BoundKind::LHS, 3, CoherenceMeasure::l1(false)),
                    std::invalid_argument);
    CHECK_THROWS_AS(bound(BoundKind::FullPattern, 3, l1n), std::invalid_argument);
    CHECK_THROWS_AS(bound(IndexPattern::IEqualsJ, 3, l1n), std::invalid_argument);
}

TEST_CASE("pattern names round-trip and reject junk") {
    for (IndexPattern p : {IndexPattern::Distinct, IndexPattern::IEqualsJ,
                           IndexPattern::INeqJEqualsK, IndexPattern::IEqualsKNeqJ,
                           IndexPattern::Full}) {
        CHECK(parse_pattern(pattern_name(p)) == p);
    }
    CHECK_THROWS_AS(parse_pattern("diag"), std::invalid_argument);
}

TEST_CASE("response-concentration sums") {
    // sigma_2 eigenstate measured in the canonical triple: excluding the x
    // basis leaves a deterministic y row and a uniform z row
    const std::vector<std::vector<double>> y_state{{0.5, 0.5}, {1.0, 0.0}, {0.5, 0.5}};
    CHECK(f_sum(y_state, 0, 2) == doctest::Approx(1.5).epsilon(1e-12));

    const std::vector<std::vector<double>> mixed{{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}};
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(f_sum(mixed, k, 2) == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(f_sum(mixed, 4, 2), std::invalid_argument);
    CHECK_THROWS_AS(f_sum({{0.5, 0.5}}, 0, 2), std::invalid_argument);
}

TEST_CASE("zero-probability outcomes are skipped, not normalized") {
    // the product state never yields the z-down outcome; S must stay finite
    const Assemblage asm_table = steer(product_zero_plus_state(), canonical());
    CHECK(asm_table.p[2][1] == doctest::Approx(0.0).epsilon(1e-15));
    const double s = s_quantity(asm_table, canonical(), CoherenceMeasure::l1());
    CHECK(std::isfinite(s));
    CHECK(s == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("settings and family size must agree") {
    Assemblage asm_table = werner_assemblage(0.5);
    asm_table.settings = 2;
    asm_table.sigma.pop_back();
    asm_table.p.pop_back();
    CHECK_THROWS_AS(s_quantity(asm_table, canonical(), CoherenceMeasure::l1()),
                    std::invalid_argument);
}
