// JSON serialization: the state-file format, MUB dumps, steering-functional
// reports, assemblages and verification summaries. Numbers are rounded to 15
// significant digits before serialization so output is diff-stable.
#ifndef NAQC_JSON_IO_HPP
#define NAQC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "naqc/assemblage.hpp"
#include "naqc/mub.hpp"
#include "naqc/naqc.hpp"
#include "naqc/qmatrix.hpp"
#include "naqc/verify.hpp"

namespace naqc {

using json = nlohmann::json;

// nearest double with 15 significant decimal digits
double round_sig15(double v);

// {"dims": [dA, dB], "matrix": [[[re, im], ...], ...]} row-major
DensityMatrix load_state_file(const std::string& path);
json state_to_json(const DensityMatrix& rho);

std::string measure_name(const CoherenceMeasure& measure);
CoherenceMeasure parse_measure(const std::string& name, std::size_t dim);  // "l1" | "relent"

json to_json(const MubFamily& fam);
json to_json(const NaqcReport& report);
json to_json(const Assemblage& asm_table);
json to_json(const SuiteReport& report);

}  // namespace naqc

#endif  // NAQC_JSON_IO_HPP
