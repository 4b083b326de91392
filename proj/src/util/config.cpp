#include "vlab/config.hpp"

#include <fstream>
#include <stdexcept>

namespace vlab {

void RunConfig::set(const std::string& key, const std::string& value) {
    auto as_double = [&] { return std::stod(value); };
    if (key == "tol_theta") tol_theta = as_double();
    else if (key == "tol_poisson") tol_poisson = as_double();
    else if (key == "tol_poisson_zeta") tol_poisson_zeta = as_double();
    else if (key == "tol_mellin_id") tol_mellin_id = as_double();
    else if (key == "tol_voronoi") tol_voronoi = as_double();
    else if (key == "tol_gl2") tol_gl2 = as_double();
    else if (key == "tol_gl3") tol_gl3 = as_double();
    else if (key == "tol_smoothed") tol_smoothed = as_double();
    else if (key == "tail_tol") tail_tol = as_double();
    else if (key == "max_terms") max_terms = std::stoll(value);
    else if (key == "cache_dir") cache_dir = value;
    else if (key == "output_format") output_format = value;
    else if (key == "threads") threads = unsigned(std::stoul(value));
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "timing") timing = value == "1" || value == "true";
    else throw std::invalid_argument("config: unknown key '" + key + "'");
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    RunConfig cfg;
    std::string line;
    std::int64_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
            line.pop_back();
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected key=value");
        cfg.set(line.substr(0, eq), line.substr(eq + 1));
    }
    return cfg;
}

} // namespace vlab
