#include "cmint/envelope.hpp"

#include <nlohmann/json.hpp>

namespace cmint {

using nlohmann::json;

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();  // "n" or "n/d"
}

json make_envelope(const std::string& command, long long d1, long long d2, long long dB,
                   long long m) {
  json env;
  env["schema_version"] = kSchemaVersion;
  env["command"] = command;
  env["inputs"] = {{"d1", d1}, {"d2", d2}, {"dB", dB}, {"m", m}};
  return env;
}

json envelope_validate(const CMPairConfig& cfg) {
  json env = make_envelope("validate", cfg.d1, cfg.d2, cfg.dB, cfg.m);
  json dbp = json::array();
  for (long long p : cfg.dB_primes) dbp.push_back(std::to_string(p));
  env["result"] = {{"valid", true},
                   {"D", std::to_string(cfg.D)},
                   {"w1", cfg.w1},
                   {"w2", cfg.w2},
                   {"dB_primes", dbp}};
  return env;
}

json envelope_validation_error(long long d1, long long d2, long long dB, long long m,
                               const ValidationError& err) {
  json env = make_envelope("validate", d1, d2, dB, m);
  env["result"] = {{"valid", false},
                   {"violation", violation_name(err.kind)},
                   {"detail", std::to_string(err.detail)}};
  return env;
}

json envelope_alphas(const CMPairConfig& cfg) {
  json env = make_envelope("alphas", cfg.d1, cfg.d2, cfg.dB, cfg.m);
  json list = json::array();
  for (const auto& al : enumerate_alphas(cfg)) {
    list.push_back({{"a", std::to_string(al.a)},
                    {"e_x", al.e.x.get_str()},
                    {"e_y", al.e.y.get_str()},
                    {"norm_e", felem_norm(cfg, al.e).get_str()}});
  }
  env["result"] = {{"count", list.size()}, {"alphas", list}};
  return env;
}

namespace {

json coeff_map_json(const ArithDegree& deg) {
  json m = json::object();
  for (const auto& [p, c] : deg.coeffs) m[std::to_string(p)] = rational_string(c);
  return m;
}

json row_json(const ReportRow& row) {
  json diff = json::array();
  for (const auto& pr : row.diff) diff.push_back(prime_label(pr));
  json r = {{"a", std::to_string(row.a)},
            {"theta", row.theta_index},
            {"theta_desc", row.theta_desc},
            {"diff", diff},
            {"term", coeff_map_json(row.term)}};
  if (row.singleton) {
    r["L"] = rational_string(row.L);
    r["R"] = row.R.get_str();
    r["p"] = std::to_string(row.p);
  }
  return r;
}

}  // namespace

json envelope_report(const std::string& command, const IntersectionReport& rep) {
  json env = make_envelope(command, rep.config.d1, rep.config.d2, rep.config.dB, rep.config.m);
  json rows = json::array();
  for (const auto& row : rep.rows) rows.push_back(row_json(row));
  env["result"] = {{"rows", rows},
                   {"coeffs", coeff_map_json(rep.total)},
                   {"log_value_approx", rep.numeric_total}};
  return env;
}

json envelope_intersect(const CMPairConfig& cfg, const IntersectionReport& rep) {
  json env = make_envelope("intersect", cfg.d1, cfg.d2, cfg.dB, cfg.m);
  env["result"] = {{"coeffs", coeff_map_json(rep.total)},
                   {"log_value_approx", rep.numeric_total},
                   {"rows_count", rep.rows.size()}};
  return env;
}

json envelope_gz_check(long long d1, long long d2, const GZComparison& cmp) {
  json env = make_envelope("gz-check", d1, d2, 1, 1);
  json oracle = json::object();
  for (const auto& [p, e] : cmp.oracle_exponents) oracle[std::to_string(p)] = std::to_string(e);
  json formula = json::object();
  for (const auto& [p, c] : cmp.formula_coeffs) formula[std::to_string(p)] = rational_string(c);
  json ratio = json::object();
  for (const auto& [p, r] : cmp.per_prime_ratio) ratio[std::to_string(p)] = rational_string(r);
  env["result"] = {{"j_squared", cmp.j_squared.get_str()},
                   {"oracle_exponents", oracle},
                   {"formula_coeffs", formula},
                   {"per_prime_ratio", ratio},
                   {"pass", cmp.pass},
                   {"precision_bits", (long long)cmp.precision_used}};
  return env;
}

std::string report_csv(const IntersectionReport& rep) {
  std::string out = "a,theta,diff,L,R,p,c_p\n";
  for (const auto& row : rep.rows) {
    std::string diff;
    for (const auto& pr : row.diff) {
      if (!diff.empty()) diff += "+";
      diff += prime_label(pr);
    }
    mpq_class cp = 0;
    if (!row.term.coeffs.empty()) cp = row.term.coeffs.begin()->second;
    out += std::to_string(row.a) + "," + std::to_string(row.theta_index) + "," + diff + ",";
    if (row.singleton)
      out += rational_string(row.L) + "," + row.R.get_str() + "," + std::to_string(row.p);
    else
      out += ",,";
    out += "," + rational_string(cp) + "\n";
  }
  return out;
}

}  // namespace cmint
