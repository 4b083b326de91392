#pragma once

// Verification reports: the uniform result object every summation engine
// returns, with JSON / CSV serialization on a stable schema.

#include <cstdint>
#include <string>

namespace vlab::engines {

struct Truncation {
    std::int64_t lhs_terms = 0;
    std::int64_t rhs_terms = 0;
    double lhs_tail = 0.0;
    double rhs_tail = 0.0;
};

struct VerificationReport {
    std::string formula;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    Truncation truncation;
    std::int64_t runtime_ms = 0;
    std::string convention_notes;

    // abs_residual = |lhs - rhs|, rel_residual = abs / max(|lhs|,|rhs|,1e-300)
    void finalize();

    // with_timing = false zeroes runtime_ms so that reports are byte-stable
    // across runs and thread counts.
    std::string to_json(bool with_timing = true) const;
    std::string to_csv_row(bool with_timing = true) const;
    static std::string csv_header();
};

struct TruncationPolicy {
    enum class Strategy { FixedCount, TailBound };
    double tail_tol = 1e-8;
    std::int64_t max_terms = 200000;
    Strategy strategy = Strategy::TailBound;
};

} // namespace vlab::engines
