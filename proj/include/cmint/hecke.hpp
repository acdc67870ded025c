#ifndef CMINT_HECKE_HPP
#define CMINT_HECKE_HPP

#include "cmint/degrees.hpp"

namespace cmint {

struct ReportRow {
  long long a = 0;
  std::size_t theta_index = 0;
  std::string theta_desc;
  std::vector<PrimeF> diff;
  bool singleton = false;
  mpq_class L = 0;
  mpz_class R = 0;
  long long p = 0;
  ArithDegree term;
};

struct IntersectionReport {
  CMPairConfig config;
  std::vector<ReportRow> rows;  // canonical (a, theta) order
  ArithDegree total;
  double numeric_total = 0;
};

// Total intersection number: the double sum of degree_X over all
// (alpha, theta). Terms are independent, so they are farmed out to
// `threads` workers and merged in canonical index order; the result is
// identical for any thread count.
ArithDegree intersection_number(const CMPairConfig& cfg, int threads = 1);

// Itemized version of the same sum.
IntersectionReport report(const CMPairConfig& cfg, int threads = 1);

}  // namespace cmint

#endif
