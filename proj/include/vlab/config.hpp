#pragma once

// Run configuration: per-formula tolerances, truncation, cache location,
// output format, and threading. A flat key=value file can override the
// built-in defaults; command-line flags override both.

#include "vlab/report.hpp"

#include <cstdint>
#include <string>

namespace vlab {

struct RunConfig {
    // acceptance tolerances per formula
    double tol_theta = 1e-12;
    double tol_poisson = 1e-10;
    double tol_poisson_zeta = 1e-7;
    double tol_mellin_id = 1e-6;
    double tol_voronoi = 1e-6;
    double tol_gl2 = 1e-4;
    double tol_gl3 = 1e-3;
    double tol_smoothed = 1e-6;

    double tail_tol = 1e-8;
    std::int64_t max_terms = 200000;

    std::string cache_dir = "vlab-cache";
    std::string output_format = "json";  // json | csv
    unsigned threads = 1;
    std::uint64_t seed = 902741;
    bool timing = true;

    engines::TruncationPolicy truncation() const {
        engines::TruncationPolicy p;
        p.tail_tol = tail_tol;
        p.max_terms = max_terms;
        return p;
    }

    // Applies "key=value" lines; '#' starts a comment. Unknown keys throw.
    static RunConfig from_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
};

} // namespace vlab
