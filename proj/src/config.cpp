#include "naqc/config.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace naqc {

Config load_config_file(const std::string& path, Config base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    const nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.contains("grid_theta")) base.grid_theta = doc["grid_theta"].get<std::size_t>();
    if (doc.contains("grid_phi")) base.grid_phi = doc["grid_phi"].get<std::size_t>();
    if (doc.contains("tolerance")) base.tolerance = doc["tolerance"].get<double>();
    if (doc.contains("seed")) base.seed = doc["seed"].get<std::uint64_t>();
    return base;
}

Config load_config_from_env() {
    Config config;
    const char* path = std::getenv("NAQC_CONFIG");
    if (path != nullptr && *path != '\0') {
        config = load_config_file(path, config);
    }
    return config;
}

}  // namespace naqc
