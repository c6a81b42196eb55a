// Runtime defaults with the precedence: command-line flags, then the JSON
// file named by NAQC_CONFIG, then these built-ins.
#ifndef NAQC_CONFIG_HPP
#define NAQC_CONFIG_HPP

#include <cstdint>
#include <string>

namespace naqc {

struct Config {
    std::size_t grid_theta = 64;
    std::size_t grid_phi = 32;
    double tolerance = 1e-9;  // validation tolerance for density matrices
    std::uint64_t seed = 0;
};

// Built-ins overlaid with the NAQC_CONFIG file when the variable is set.
// Throws on an unreadable or malformed file.
Config load_config_from_env();

// Parse a config JSON document at `path` over the given base.
Config load_config_file(const std::string& path, Config base);

}  // namespace naqc

#endif  // NAQC_CONFIG_HPP
