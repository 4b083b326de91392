#include "vlab/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace vlab::engines {

void VerificationReport::finalize() {
    abs_residual = std::fabs(lhs - rhs);
    rel_residual = abs_residual / std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
}

namespace {

// %.17g keeps doubles byte-stable across round trips.
nlohmann::ordered_json number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return nlohmann::ordered_json::parse(buf);
}

} // namespace

std::string VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["formula"] = formula;
    j["lhs"] = number(lhs);
    j["rhs"] = number(rhs);
    j["abs_residual"] = number(abs_residual);
    j["rel_residual"] = number(rel_residual);
    j["truncation"] = {
        {"lhs_terms", truncation.lhs_terms},
        {"rhs_terms", truncation.rhs_terms},
        {"lhs_tail", number(truncation.lhs_tail)},
        {"rhs_tail", number(truncation.rhs_tail)},
    };
    j["runtime_ms"] = with_timing ? runtime_ms : 0;
    j["convention_notes"] = convention_notes;
    return j.dump(2);
}

std::string VerificationReport::csv_header() {
    return "formula,lhs,rhs,abs_residual,rel_residual,lhs_terms,rhs_terms,"
           "runtime_ms,convention_notes";
}

std::string VerificationReport::to_csv_row(bool with_timing) const {
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "%s,%.17g,%.17g,%.17g,%.17g,%lld,%lld,%lld,\"%s\"",
                  formula.c_str(), lhs, rhs, abs_residual, rel_residual,
                  (long long)truncation.lhs_terms, (long long)truncation.rhs_terms,
                  with_timing ? (long long)runtime_ms : 0LL,
                  convention_notes.c_str());
    return buf;
}

} // namespace vlab::engines
