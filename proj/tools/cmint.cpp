// Command-line front end: validation, alpha enumeration, per-term degree
// report, intersection totals, and the Gross-Zagier numerical cross-check.
//
// Exit codes: 0 ok, 2 validation failure, 3 precision exhausted, 64 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cmint/envelope.hpp"

using namespace cmint;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitPrecision = 3;
constexpr int kExitUsage = 64;

struct Options {
  long long d1 = 0, d2 = 0, dB = 1, m = 1;
  bool json_out = false;
  std::string csv_path;
  long long prec_bits = 0;
  int threads = 1;
};

void add_common(CLI::App* cmd, Options& opt, bool need_db = true) {
  cmd->add_option("--d1", opt.d1, "first negative fundamental discriminant")->required();
  cmd->add_option("--d2", opt.d2, "second negative fundamental discriminant")->required();
  if (need_db) {
    cmd->add_option("--dB", opt.dB, "quaternion discriminant (1 = split)");
    cmd->add_option("--m", opt.m, "Hecke index");
  }
  cmd->add_flag("--json", opt.json_out, "machine-readable JSON envelope");
  cmd->add_option("--threads", opt.threads, "worker threads (0 = hardware)");
}

int resolve_threads(int t) {
  if (t > 0) return t;
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? (int)hc : 1;
}

void emit(const json& env, bool json_out, const std::string& human) {
  if (json_out)
    std::cout << env.dump(2) << "\n";
  else
    std::cout << human;
}

void write_csv(const std::string& path, const IntersectionReport& rep) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open csv path: " + path);
  f << report_csv(rep);
}

std::string human_total(const ArithDegree& total) {
  std::string s = "total = " + total.to_string();
  char buf[64];
  std::snprintf(buf, sizeof(buf), " = %.10f\n", total.log_value());
  return s + buf;
}

int run_validate(const Options& opt) {
  CMPairConfig cfg = validate(opt.d1, opt.d2, opt.dB, opt.m);
  std::string human = "valid: D = " + std::to_string(cfg.D) + ", w1 = " + std::to_string(cfg.w1) +
                      ", w2 = " + std::to_string(cfg.w2) + "\n";
  emit(envelope_validate(cfg), opt.json_out, human);
  return kExitOk;
}

int run_alphas(const Options& opt) {
  CMPairConfig cfg = validate(opt.d1, opt.d2, opt.dB, opt.m);
  auto alphas = enumerate_alphas(cfg);
  std::string human;
  for (const auto& al : alphas)
    human += "a = " + std::to_string(al.a) +
             ", e = (" + al.e.x.get_str() + ", " + al.e.y.get_str() + ")" +
             ", N(e) = " + felem_norm(cfg, al.e).get_str() + "\n";
  human += std::to_string(alphas.size()) + " alphas\n";
  emit(envelope_alphas(cfg), opt.json_out, human);
  return kExitOk;
}

int run_degree(const Options& opt) {
  CMPairConfig cfg = validate(opt.d1, opt.d2, opt.dB, opt.m);
  IntersectionReport rep = report(cfg, resolve_threads(opt.threads));
  if (!opt.csv_path.empty()) write_csv(opt.csv_path, rep);
  std::string human;
  for (const auto& row : rep.rows) {
    std::string diff;
    for (const auto& pr : row.diff) diff += (diff.empty() ? "" : "+") + prime_label(pr);
    human += "a = " + std::to_string(row.a) + ", theta = " + std::to_string(row.theta_index) +
             ", Diff = {" + diff + "}";
    if (row.singleton)
      human += ", L = " + rational_string(row.L) + ", R = " + row.R.get_str();
    human += ", term = " + row.term.to_string() + "\n";
  }
  human += human_total(rep.total);
  emit(envelope_report("degree", rep), opt.json_out, human);
  return kExitOk;
}

int run_intersect(const Options& opt) {
  CMPairConfig cfg = validate(opt.d1, opt.d2, opt.dB, opt.m);
  IntersectionReport rep = report(cfg, resolve_threads(opt.threads));
  if (!opt.csv_path.empty()) write_csv(opt.csv_path, rep);
  emit(envelope_intersect(cfg, rep), opt.json_out, human_total(rep.total));
  return kExitOk;
}

int run_gz_check(const Options& opt) {
  GZComparison cmp = gz_compare(opt.d1, opt.d2, (mpfr_prec_t)opt.prec_bits);
  std::string human = "J^2 = " + cmp.j_squared.get_str() + "\noracle exponents: ";
  for (const auto& [p, e] : cmp.oracle_exponents)
    human += std::to_string(p) + "^" + std::to_string(e) + " ";
  human += "\nformula: ";
  for (const auto& [p, c] : cmp.formula_coeffs)
    human += std::to_string(p) + "^" + rational_string(c) + " ";
  human += std::string("\n") + (cmp.pass ? "PASS" : "FAIL") + " (precision " +
           std::to_string((long long)cmp.precision_used) + " bits)\n";
  emit(envelope_gz_check(opt.d1, opt.d2, cmp), opt.json_out, human);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic intersection numbers of CM divisors on modular and Shimura curves"};
  app.require_subcommand(1);

  Options opt;
  CLI::App* v = app.add_subcommand("validate", "check a (d1, d2, dB, m) configuration");
  add_common(v, opt);
  CLI::App* a = app.add_subcommand("alphas", "enumerate totally positive trace-m alphas");
  add_common(a, opt);
  CLI::App* d = app.add_subcommand("degree", "itemized per-(alpha, theta) degree report");
  add_common(d, opt);
  d->add_option("--csv", opt.csv_path, "write report rows as CSV");
  CLI::App* i = app.add_subcommand("intersect", "total intersection number");
  add_common(i, opt);
  i->add_option("--csv", opt.csv_path, "write report rows as CSV");
  CLI::App* g = app.add_subcommand("gz-check", "Gross-Zagier J(d1,d2)^2 cross-check (dB=1, m=1)");
  add_common(g, opt, /*need_db=*/false);
  g->add_option("--prec-bits", opt.prec_bits, "initial working precision (0 = auto)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (v->parsed()) return run_validate(opt);
    if (a->parsed()) return run_alphas(opt);
    if (d->parsed()) return run_degree(opt);
    if (i->parsed()) return run_intersect(opt);
    if (g->parsed()) return run_gz_check(opt);
  } catch (const ValidationError& err) {
    json env = envelope_validation_error(opt.d1, opt.d2, opt.dB, opt.m, err);
    if (opt.json_out)
      std::cout << env.dump(2) << "\n";
    else
      std::cerr << "validation failed: " << err.what() << "\n";
    return kExitValidation;
  } catch (const PrecisionExhausted& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitPrecision;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
