#ifndef CMINT_ENVELOPE_HPP
#define CMINT_ENVELOPE_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "cmint/gzoracle.hpp"
#include "cmint/hecke.hpp"

namespace cmint {

inline constexpr const char* kSchemaVersion = "1";

// Machine-readable command envelopes. Exact values are serialized as
// integer or "num/den" strings; the only floating field is
// log_value_approx, flagged approximate by name.
nlohmann::json make_envelope(const std::string& command, long long d1, long long d2, long long dB,
                             long long m);
nlohmann::json envelope_validate(const CMPairConfig& cfg);
nlohmann::json envelope_validation_error(long long d1, long long d2, long long dB, long long m,
                                         const ValidationError& err);
nlohmann::json envelope_alphas(const CMPairConfig& cfg);
nlohmann::json envelope_report(const std::string& command, const IntersectionReport& rep);
nlohmann::json envelope_intersect(const CMPairConfig& cfg, const IntersectionReport& rep);
nlohmann::json envelope_gz_check(long long d1, long long d2, const GZComparison& cmp);

std::string rational_string(const mpq_class& q);

// CSV of report rows, header: a,theta,diff,L,R,p,c_p
std::string report_csv(const IntersectionReport& rep);

}  // namespace cmint

#endif
