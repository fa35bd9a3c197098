#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fmdil/common.hpp"

namespace fmdil {

// One run of the pipeline, fully determined by this record; reports embed
// its hash so results are traceable to exact parameters.
struct RunConfig {
    std::string group_spec = "cyclic 2";
    std::string psi_spec = "delta";
    std::vector<double> t_grid = {0.1, 0.5, 1.0, 2.0, 5.0};
    double cert_tol = 1e-10;
    double dilation_tol = 1e-10;
    double quad_tol = 1e-8;
    int mc_samples = 100000;
    std::uint64_t seed = 1;
    std::string convention = "both";  // "A", "B", or "both"
    std::string out_path;             // empty = stdout

    void validate() const;  // throws std::invalid_argument
};

std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);
RunConfig load_config_file(const std::string& path);

// FNV-1a hash of the canonical serialization.
std::uint64_t config_hash(const RunConfig& cfg);

}  // namespace fmdil
