// Named property suites over the coherence, steering-functional, model and
// MUB modules. Each check records the worst observed value against its
// limit; the CLI and the acceptance runner both drive these.
#ifndef NAQC_VERIFY_HPP
#define NAQC_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace naqc {

struct CheckResult {
    std::string name;
    double observed = 0.0;
    double limit = 0.0;
    bool ok = false;
    std::optional<std::uint64_t> failing_seed;  // seed index of the worst sample
};

// One Monte-Carlo sweep summary: which model class, at what dimension, how
// many trials, and the maximum it reached.
struct SweepSummary {
    std::string kind;  // "lhs" | "sqi1" | "quantum"
    std::size_t d = 2;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double max_s = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::vector<CheckResult> checks;
    std::vector<SweepSummary> sweeps;  // populated by the sweep-driven suites
};

// Suites: coherence, lhs, sqi, quantum, qudit, mub, f. Throws on an
// unknown name.
SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed);

std::vector<std::string> suite_names();

}  // namespace naqc

#endif  // NAQC_VERIFY_HPP
