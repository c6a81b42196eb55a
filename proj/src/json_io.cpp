#include "naqc/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace naqc {

double round_sig15(double v) {
    if (!std::isfinite(v) || v == 0.0) return v;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return std::strtod(buf, nullptr);
}

namespace {

json complex_entry(cx v) {
    return json::array({round_sig15(v.real()), round_sig15(v.imag())});
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_entry(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

DensityMatrix load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file '" + path + "'");
    json doc = json::parse(in);  // propagates parse errors with byte position

    if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].size() != 2) {
        throw std::runtime_error("state file: 'dims' must be a two-entry array");
    }
    const std::size_t da = doc["dims"][0].get<std::size_t>();
    const std::size_t db = doc["dims"][1].get<std::size_t>();
    if (da < 1 || db < 1) throw std::runtime_error("state file: dims must be positive");
    const std::size_t d = da * db;

    if (!doc.contains("matrix") || !doc["matrix"].is_array() || doc["matrix"].size() != d) {
        throw std::runtime_error("state file: 'matrix' must have " + std::to_string(d) +
                                 " rows");
    }
    ComplexMatrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
        const json& row = doc["matrix"][r];
        if (!row.is_array() || row.size() != d) {
            throw std::runtime_error("state file: row " + std::to_string(r) + " must have " +
                                     std::to_string(d) + " entries");
        }
        for (std::size_t c = 0; c < d; ++c) {
            const json& e = row[c];
            if (!e.is_array() || e.size() != 2) {
                throw std::runtime_error("state file: entry (" + std::to_string(r) + "," +
                                         std::to_string(c) + ") must be [re, im]");
            }
            m(r, c) = cx{e[0].get<double>(), e[1].get<double>()};
        }
    }
    return DensityMatrix(std::move(m), da, db);
}

json state_to_json(const DensityMatrix& rho) {
    const auto [da, db] = rho.dims();
    return json{{"dims", {da, db}}, {"matrix", matrix_to_json(rho.mat())}};
}

std::string measure_name(const CoherenceMeasure& measure) {
    return measure.kind == MeasureKind::L1 ? "l1" : "relent";
}

CoherenceMeasure parse_measure(const std::string& name, std::size_t dim) {
    if (name == "l1") return CoherenceMeasure::default_for(MeasureKind::L1, dim);
    if (name == "relent") return CoherenceMeasure::default_for(MeasureKind::RelativeEntropy, dim);
    throw std::invalid_argument("unknown measure '" + name + "' (expected l1 or relent)");
}

json to_json(const MubFamily& fam) {
    json bases = json::array();
    for (const Basis& b : fam.bases) {
        json basis = json::array();
        for (const auto& v : b.vectors) {
            json vec = json::array();
            for (cx amp : v) vec.push_back(complex_entry(amp));
            basis.push_back(std::move(vec));
        }
        bases.push_back(std::move(basis));
    }
    return json{{"dim", fam.dim}, {"bases", std::move(bases)}};
}

json to_json(const NaqcReport& report) {
    json patterns = json::object();
    for (const auto& [pattern, value] : report.pattern_values) {
        patterns[pattern_name(pattern)] = round_sig15(value);
    }
    json bounds = json::object();
    if (report.bounds.lhs) bounds["lhs"] = round_sig15(*report.bounds.lhs);
    if (report.bounds.sqi) bounds["sqi"] = round_sig15(*report.bounds.sqi);
    if (report.bounds.quantum) bounds["quantum"] = round_sig15(*report.bounds.quantum);
    if (report.bounds.full_pattern) {
        bounds["full_pattern"] = round_sig15(*report.bounds.full_pattern);
    }
    json out{{"s_value", round_sig15(report.s_value)},
             {"patterns", std::move(patterns)},
             {"bounds", std::move(bounds)},
             {"measure", measure_name(report.measure)},
             {"dim", report.dim}};
    if (report.theta) out["theta"] = round_sig15(*report.theta);
    if (report.phi) out["phi"] = round_sig15(*report.phi);
    return out;
}

json to_json(const Assemblage& asm_table) {
    json sigma = json::array();
    json probs = json::array();
    for (std::size_t x = 0; x < asm_table.settings; ++x) {
        json per_setting = json::array();
        json p_row = json::array();
        for (std::size_t a = 0; a < asm_table.outcomes; ++a) {
            per_setting.push_back(matrix_to_json(asm_table.sigma[x][a]));
            p_row.push_back(round_sig15(asm_table.p[x][a]));
        }
        sigma.push_back(std::move(per_setting));
        probs.push_back(std::move(p_row));
    }
    return json{{"dim", asm_table.dim},
                {"settings", asm_table.settings},
                {"outcomes", asm_table.outcomes},
                {"sigma", std::move(sigma)},
                {"p", std::move(probs)}};
}

json to_json(const SuiteReport& report) {
    json checks = json::array();
    for (const CheckResult& c : report.checks) {
        json entry{{"name", c.name},
                   {"observed", round_sig15(c.observed)},
                   {"limit", round_sig15(c.limit)},
                   {"ok", c.ok}};
        if (c.failing_seed) entry["seed_index"] = *c.failing_seed;
        checks.push_back(std::move(entry));
    }
    json out{{"suite", report.suite},
             {"trials", report.trials},
             {"seed", report.seed},
             {"ok", report.ok},
             {"checks", std::move(checks)}};
    if (!report.sweeps.empty()) {
        json sweeps = json::array();
        for (const SweepSummary& s : report.sweeps) {
            sweeps.push_back(json{{"kind", s.kind},
                                  {"d", s.d},
                                  {"trials", s.trials},
                                  {"seed", s.seed},
                                  {"max_s", round_sig15(s.max_s)}});
        }
        out["sweeps"] = std::move(sweeps);
    }
    return out;
}

}  // namespace naqc
