#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "naqc/json_io.hpp"
#include "naqc/qmatrix.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd =
        std::string(NAQC_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WEXITSTATUS(status);
    res.out = slurp(out_path);
    res.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return res;
}

}  // namespace

TEST_CASE("compute on Werner endpoints") {
    const RunResult full = run_cli("compute --werner 1 --measure l1 --optimize");
    REQUIRE(full.exit_code == 0);
    const json rep = json::parse(full.out);
    CHECK(rep["s_value"].get<double>() == doctest::Approx(6.0).epsilon(1e-5));
    CHECK(rep["bounds"]["lhs"].get<double>() == 4.0);
    CHECK(rep["bounds"]["sqi"].get<double>() == 6.0);
    CHECK(rep["measure"] == "l1");
    CHECK(rep["dim"] == 2);

    const RunResult half = run_cli("compute --werner 0.5 --measure l1 --optimize");
    REQUIRE(half.exit_code == 0);
    CHECK(json::parse(half.out)["s_value"].get<double>() ==
          doctest::Approx(1.5).epsilon(1e-5));
}

TEST_CASE("compute accepts a state file and reports the LHS-tight value") {
    const std::string path = "product_state.tmp.json";
    std::ofstream(path) << naqc::state_to_json(naqc::product_zero_plus_state()).dump();
    const RunResult res = run_cli("compute --state " + path + " --measure l1");
    std::remove(path.c_str());
    REQUIRE(res.exit_code == 0);
    const json rep = json::parse(res.out);
    CHECK(rep["s_value"].get<double>() == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(rep["patterns"]["full"].get<double>() == doctest::Approx(18.0).epsilon(1e-9));
}

TEST_CASE("compute with a pattern selection echoes that value") {
    const RunResult res =
        run_cli("compute --werner 1 --measure l1 --pattern i_eq_j");
    REQUIRE(res.exit_code == 0);
    const json rep = json::parse(res.out);
    CHECK(rep["selected_pattern"] == "i_eq_j");
    CHECK(rep["selected_value"].get<double>() == doctest::Approx(6.0).epsilon(1e-9));
}

TEST_CASE("compute usage errors exit with 2") {
    CHECK(run_cli("compute --measure l1").exit_code == 2);
    CHECK(run_cli("compute --werner 0.5 --state x.json").exit_code == 2);
    CHECK(run_cli("compute --werner 0.5 --measure l2").exit_code == 2);
}

TEST_CASE("malformed and invalid state files exit with 2 and a diagnostic") {
    const std::string path = "broken_state.tmp.json";
    std::ofstream(path) << "{\"dims\": [2, 2], \"matrix\": [[";
    const RunResult parse_fail = run_cli("compute --state " + path + " --measure l1");
    CHECK(parse_fail.exit_code == 2);
    CHECK(parse_fail.err.find("parse") != std::string::npos);
    CHECK(parse_fail.out.empty());

    // trace 0.98: validation failure must name the invariant
    json bad = naqc::state_to_json(naqc::product_zero_plus_state());
    bad["matrix"][0][0][0] = 0.48;
    std::ofstream(path) << bad.dump();
    const RunResult invalid = run_cli("compute --state " + path + " --measure l1");
    std::remove(path.c_str());
    CHECK(invalid.exit_code == 2);
    CHECK(invalid.err.find("trace") != std::string::npos);
}

TEST_CASE("scan writes the exact CSV schema with stable bytes") {
    const std::string csv = "scan_l1.tmp.csv";
    const RunResult res = run_cli("scan --measure l1 --steps 11 --out " + csv);
    REQUIRE(res.exit_code == 0);
    const std::string first = slurp(csv);
    REQUIRE_FALSE(first.empty());
    CHECK(first.find('\r') == std::string::npos);

    std::istringstream lines(first);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "p_w,s_opt,theta,phi,s_full_pattern,bound_lhs,bound_sqi");
    std::vector<std::string> rows;
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    REQUIRE(rows.size() == 11);
    CHECK(rows.front().rfind("0.000000,0.000000,", 0) == 0);
    CHECK(rows.back().rfind("1.000000,6.000000,", 0) == 0);
    CHECK(rows.back().find(",4.000000,6.000000") != std::string::npos);

    // byte-for-byte reproducibility
    const RunResult rerun = run_cli("scan --measure l1 --steps 11 --out " + csv);
    REQUIRE(rerun.exit_code == 0);
    CHECK(slurp(csv) == first);
    std::remove(csv.c_str());
}

TEST_CASE("scan with the pattern columns reproduces the normalized curves") {
    const std::string csv = "scan_pat.tmp.csv";
    const RunResult res = run_cli("scan --measure l1 --steps 3 --out " + csv + " --patterns");
    REQUIRE(res.exit_code == 0);
    std::istringstream lines(slurp(csv));
    std::string header;
    std::getline(lines, header);
    CHECK(header ==
          "p_w,s_opt,theta,phi,s_full_pattern,bound_lhs,bound_sqi,s_ijk_over_2,s_full_over_9");
    std::string row;
    std::getline(lines, row);  // p_w = 0
    std::getline(lines, row);
    std::getline(lines, row);  // p_w = 1
    CHECK(row.rfind("1.000000,", 0) == 0);
    CHECK(row.find(",3.000000,") != std::string::npos);  // s_ijk_over_2 = 6/2
    std::remove(csv.c_str());
}

TEST_CASE("relent scan stays below the LHS bound before its threshold") {
    const std::string csv = "scan_re.tmp.csv";
    const RunResult res = run_cli("scan --measure relent --steps 11 --out " + csv);
    REQUIRE(res.exit_code == 0);
    std::istringstream lines(slurp(csv));
    std::string line;
    std::getline(lines, line);
    double s_at_09 = -1.0;
    while (std::getline(lines, line)) {
        if (line.rfind("0.900000,", 0) == 0) {
            s_at_09 = std::atof(line.substr(line.find(',') + 1).c_str());
        }
    }
    std::remove(csv.c_str());
    REQUIRE(s_at_09 >= 0.0);
    CHECK(s_at_09 < 4.0);
}

TEST_CASE("scan argument and path errors exit with 2") {
    CHECK(run_cli("scan --measure l1 --steps 1 --out x.tmp.csv").exit_code == 2);
    CHECK(run_cli("scan --measure l1 --steps 4 --out /nonexistent/dir/x.csv").exit_code == 2);
}

TEST_CASE("threshold subcommand emits the known crossings") {
    const RunResult l1 = run_cli("threshold --measure l1 --bound lhs");
    REQUIRE(l1.exit_code == 0);
    CHECK(std::abs(json::parse(l1.out)["p_star"].get<double>() - 0.8165) <= 1e-4 + 5e-6);

    const RunResult relent = run_cli("threshold --measure relent --bound lhs");
    REQUIRE(relent.exit_code == 0);
    CHECK(std::abs(json::parse(relent.out)["p_star"].get<double>() - 0.944) <= 1e-3);

    const RunResult sqi = run_cli("threshold --measure l1 --bound sqi");
    REQUIRE(sqi.exit_code == 0);
    CHECK(json::parse(sqi.out)["p_star"] == "none");
}

TEST_CASE("verify runs a small suite and reports pass with sweep summaries") {
    const RunResult res = run_cli("verify --suite lhs --trials 200 --seed 7");
    REQUIRE(res.exit_code == 0);
    const json rep = json::parse(res.out);
    CHECK(rep["ok"] == true);
    CHECK(rep["suite"] == "lhs");
    CHECK(rep["trials"] == 200);
    for (const auto& check : rep["checks"]) {
        CHECK(check["observed"].get<double>() <= check["limit"].get<double>());
    }
    REQUIRE(rep.contains("sweeps"));
    const auto& sweep = rep["sweeps"][0];
    CHECK(sweep["kind"] == "lhs");
    CHECK(sweep["d"] == 2);
    CHECK(sweep["trials"] == 200);
    CHECK(sweep["seed"] == 7);
    CHECK(sweep["max_s"].get<double>() <= 4.0 + 1e-9);
}

TEST_CASE("compute handles two-qutrit state files with the generalized bounds") {
    const std::string path = "qutrit_pair.tmp.json";
    naqc::ComplexMatrix mixed = naqc::ComplexMatrix::identity(9) * naqc::cx{1.0 / 9.0, 0.0};
    std::ofstream(path) << naqc::state_to_json(naqc::DensityMatrix(std::move(mixed), 3, 3)).dump();
    const RunResult res = run_cli("compute --state " + path + " --measure l1");
    REQUIRE(res.exit_code == 0);
    const json rep = json::parse(res.out);
    CHECK(rep["dim"] == 3);
    CHECK(rep["s_value"].get<double>() == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(rep["bounds"]["lhs"].get<double>() == 18.0);
    CHECK(rep["bounds"]["sqi"].get<double>() == 24.0);

    // relative entropy at d > 2 computes S but carries no established bounds
    const RunResult relent = run_cli("compute --state " + path + " --measure relent");
    std::remove(path.c_str());
    REQUIRE(relent.exit_code == 0);
    CHECK(json::parse(relent.out)["bounds"].empty());

    const RunResult opt_err = run_cli("compute --werner 0.5 --measure l1 --optimize --state x");
    CHECK(opt_err.exit_code == 2);
}

TEST_CASE("verify mub covers every supported dimension") {
    const RunResult res = run_cli("verify --suite mub");
    REQUIRE(res.exit_code == 0);
    const json rep = json::parse(res.out);
    CHECK(rep["ok"] == true);
    CHECK(rep["checks"].size() == 8);
}

TEST_CASE("verify rejects unknown suites") {
    const RunResult res = run_cli("verify --suite everything");
    CHECK(res.exit_code == 2);
}

TEST_CASE("mub dumps are valid JSON with the declared shape") {
    const RunResult qubit = run_cli("mub --dim 2 --theta 0 --phi 0");
    REQUIRE(qubit.exit_code == 0);
    const json fam = json::parse(qubit.out);
    CHECK(fam["dim"] == 2);
    REQUIRE(fam["bases"].size() == 3);
    // canonicalized x+ vector: both amplitudes 1/sqrt(2), real
    const auto xp = fam["bases"][0][0];
    CHECK(xp[0][0].get<double>() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
    CHECK(xp[0][1].get<double>() == doctest::Approx(0.0));
    CHECK(std::abs(xp[1][0].get<double>()) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    const RunResult qutrit = run_cli("mub --dim 3");
    REQUIRE(qutrit.exit_code == 0);
    CHECK(json::parse(qutrit.out)["bases"].size() == 4);

    const RunResult bad = run_cli("mub --dim 6");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("2, 3, 4, 5, 7, 8, 9, 25") != std::string::npos);
}

TEST_CASE("assemblage serialization carries the state-file matrix encoding") {
    const naqc::Assemblage asm_table =
        naqc::steer(naqc::werner_state(0.5), naqc::rotated_qubit_mubs(0.0, 0.0));
    const json doc = naqc::to_json(asm_table);
    CHECK(doc["dim"] == 2);
    CHECK(doc["settings"] == 3);
    CHECK(doc["outcomes"] == 2);
    REQUIRE(doc["sigma"].size() == 3);
    REQUIRE(doc["sigma"][0].size() == 2);
    // each sigma entry is a matrix of [re, im] pairs; probabilities match traces
    const auto& m = doc["sigma"][2][0];
    REQUIRE(m.size() == 2);
    CHECK(m[0][0].size() == 2);
    const double trace = m[0][0][0].get<double>() + m[1][1][0].get<double>();
    CHECK(trace == doctest::Approx(doc["p"][2][0].get<double>()).epsilon(1e-12));
}

TEST_CASE("werner parameter outside [0,1] is a usage error") {
    CHECK(run_cli("compute --werner 1.5 --measure l1").exit_code == 2);
    CHECK(run_cli("compute --werner -0.1 --measure l1").exit_code == 2);
}

TEST_CASE("config file defaults are honored") {
    const std::string cfg = "naqc_config.tmp.json";
    std::ofstream(cfg) << R"({"grid_theta": 16, "grid_phi": 8, "seed": 3})";
    const std::string cmd = std::string("NAQC_CONFIG=") + cfg +
                            " " + NAQC_CLI_PATH +
                            " compute --werner 0.9 --measure l1 --optimize > cfg_out.tmp 2>&1";
    const int status = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(status) == 0);
    const json rep = json::parse(slurp("cfg_out.tmp"));
    // the Werner objective is frame independent, so a coarse grid still lands on 6 p^2
    CHECK(rep["s_value"].get<double>() == doctest::Approx(4.86).epsilon(1e-5));
    std::remove(cfg.c_str());
    std::remove("cfg_out.tmp");

    std::ofstream(cfg) << "{not json";
    const std::string bad_cmd = std::string("NAQC_CONFIG=") + cfg + " " + NAQC_CLI_PATH +
                                " mub --dim 2 > /dev/null 2>&1";
    CHECK(WEXITSTATUS(std::system(bad_cmd.c_str())) == 2);
    std::remove(cfg.c_str());
}

TEST_CASE("command-line flags override the config file") {
    const std::string cfg = "naqc_seed.tmp.json";
    std::ofstream(cfg) << R"({"seed": 3})";
    const std::string cmd = std::string("NAQC_CONFIG=") + cfg + " " + NAQC_CLI_PATH +
                            " verify --suite mub --seed 9 > seed_out.tmp 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    const json rep = json::parse(slurp("seed_out.tmp"));
    CHECK(rep["seed"] == 9);

    // without the flag, the config seed applies
    const std::string cmd2 = std::string("NAQC_CONFIG=") + cfg + " " + NAQC_CLI_PATH +
                             " verify --suite mub > seed_out.tmp 2>&1";
    REQUIRE(WEXITSTATUS(std::system(cmd2.c_str())) == 0);
    CHECK(json::parse(slurp("seed_out.tmp"))["seed"] == 3);
    std::remove(cfg.c_str());
    std::remove("seed_out.tmp");
}
