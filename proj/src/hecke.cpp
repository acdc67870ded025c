#include "cmint/hecke.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace cmint {

namespace {

// Runs evaluate_term over the (alpha, theta) grid with `threads` workers
// pulling indices from a shared counter; results land in preallocated
// slots, so the output is independent of scheduling.
std::vector<DegreeTerm> evaluate_grid(const CMPairConfig& cfg,
                                      const std::vector<AlphaElement>& alphas,
                                      const std::vector<ThetaHom>& thetas, int threads) {
  std::size_t total = alphas.size() * thetas.size();
  std::vector<DegreeTerm> terms(total);
  if (threads < 1) threads = 1;
  threads = (int)std::min<std::size_t>(threads, std::max<std::size_t>(total, 1));

  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    try {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= total) return;
        const AlphaElement& al = alphas[i / thetas.size()];
        const ThetaHom& th = thetas[i % thetas.size()];
        terms[i] = evaluate_term(cfg, al, th);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return terms;
}

}  // namespace

ArithDegree intersection_number(const CMPairConfig& cfg, int threads) {
  auto alphas = enumerate_alphas(cfg);
  auto thetas = enumerate_thetas(cfg);
  ArithDegree total;
  for (const auto& term : evaluate_grid(cfg, alphas, thetas, threads)) total += term.value;
  return total;
}

IntersectionReport report(const CMPairConfig& cfg, int threads) {
  IntersectionReport rep;
  rep.config = cfg;
  auto alphas = enumerate_alphas(cfg);
  auto thetas = enumerate_thetas(cfg);
  auto terms = evaluate_grid(cfg, alphas, thetas, threads);
  rep.rows.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const AlphaElement& al = alphas[i / thetas.size()];
    std::size_t ti = i % thetas.size();
    ReportRow row;
    row.a = al.a;
    row.theta_index = ti;
    row.theta_desc = thetas[ti].to_string();
    row.diff = std::move(terms[i].diff);
    row.singleton = terms[i].singleton;
    row.L = terms[i].L;
    row.R = terms[i].R;
    row.p = terms[i].p;
    row.term = std::move(terms[i].value);
    rep.total += row.term;
    rep.rows.push_back(std::move(row));
  }
  rep.numeric_total = rep.total.log_value();
  return rep;
}

}  // namespace cmint
