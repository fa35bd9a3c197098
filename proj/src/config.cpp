#include "fmdil/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "fmdil/errors.hpp"

namespace fmdil {

void RunConfig::validate() const {
    if (cert_tol <= 0 || dilation_tol <= 0 || quad_tol <= 0)
        throw std::invalid_argument("tolerances must be positive");
    if (mc_samples < 1)
        throw std::invalid_argument("mc_samples must be at least 1");
    for (double t : t_grid)
        if (t < 0)
            throw std::invalid_argument("t-grid entries must be nonnegative");
    if (convention != "A" && convention != "B" && convention != "both")
        throw std::invalid_argument("convention must be A, B or both");
}

std::string config_to_json(const RunConfig& cfg) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["group"] = cfg.group_spec;
    j["psi"] = cfg.psi_spec;
    j["t_grid"] = cfg.t_grid;
    j["cert_tol"] = cfg.cert_tol;
    j["dilation_tol"] = cfg.dilation_tol;
    j["quad_tol"] = cfg.quad_tol;
    j["mc_samples"] = cfg.mc_samples;
    j["seed"] = cfg.seed;
    j["convention"] = cfg.convention;
    j["out"] = cfg.out_path;
    return j.dump(2);
}

RunConfig config_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("config parse error: ") + e.what());
    }
    RunConfig cfg;
    if (j.contains("group")) cfg.group_spec = j["group"].get<std::string>();
    if (j.contains("psi")) cfg.psi_spec = j["psi"].get<std::string>();
    if (j.contains("t_grid"))
        cfg.t_grid = j["t_grid"].get<std::vector<double>>();
    if (j.contains("cert_tol")) cfg.cert_tol = j["cert_tol"].get<double>();
    if (j.contains("dilation_tol"))
        cfg.dilation_tol = j["dilation_tol"].get<double>();
    if (j.contains("quad_tol")) cfg.quad_tol = j["quad_tol"].get<double>();
    if (j.contains("mc_samples")) cfg.mc_samples = j["mc_samples"].get<int>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("convention"))
        cfg.convention = j["convention"].get<std::string>();
    if (j.contains("out")) cfg.out_path = j["out"].get<std::string>();
    cfg.validate();
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return config_from_json(buf.str());
}

std::uint64_t config_hash(const RunConfig& cfg) {
    // The output destination does not affect results and stays out of the
    // fingerprint.
    RunConfig canon = cfg;
    canon.out_path.clear();
    return fnv1a64(config_to_json(canon));
}

}  // namespace fmdil
