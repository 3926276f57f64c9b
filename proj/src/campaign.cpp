#include "vsmooth/exact/campaign.hpp"

#include <omp.h>

#include <exception>
#include <mutex>
#include <stdexcept>

#include "vsmooth/exact/kv.hpp"
#include "vsmooth/exact/verify.hpp"

namespace vsmooth::exact {

namespace {

void validate(QRange range) {
  if (range.lo < 2 || range.hi < range.lo)
    throw std::invalid_argument("q range must satisfy 2 <= lo <= hi");
}

int thread_count(const CampaignOptions& opts) {
  return opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
}

using PerQ = std::vector<VerificationReport>;

// Runs work(q) for every q in the range across an OpenMP pool, emitting
// results to the sink in ascending q order as soon as the prefix completes.
template <typename Work>
std::vector<VerificationReport> run_parallel(QRange range,
                                             const CampaignOptions& opts,
                                             const ReportSink& sink,
                                             Work work) {
  validate(range);
  const int n = range.hi - range.lo + 1;
  std::vector<PerQ> slots(static_cast<std::size_t>(n));
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  std::vector<VerificationReport> out;
  std::mutex flush_mutex;
  int next_flush = 0;
  std::exception_ptr error;

#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(opts))
  for (int i = 0; i < n; ++i) {
    try {
      PerQ reports = work(range.lo + i);
      std::lock_guard<std::mutex> lock(flush_mutex);
      slots[static_cast<std::size_t>(i)] = std::move(reports);
      done[static_cast<std::size_t>(i)] = true;
      while (next_flush < n && done[static_cast<std::size_t>(next_flush)]) {
        for (auto& r : slots[static_cast<std::size_t>(next_flush)]) {
          if (sink) sink(r);
          out.push_back(std::move(r));
        }
        slots[static_cast<std::size_t>(next_flush)].clear();
        ++next_flush;
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(flush_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

template <typename Work>
std::vector<VerificationReport> run_serial(QRange range, const ReportSink& sink,
                                           Work work) {
  validate(range);
  std::vector<VerificationReport> out;
  for (int q = range.lo; q <= range.hi; ++q) {
    for (auto& r : work(q)) {
      if (sink) sink(r);
      out.push_back(std::move(r));
    }
  }
  return out;
}

PerQ lower_checks(int q) {
  PerQ reports;
  reports.push_back(verify_factorization(q));
  reports.push_back(verify_positivity(q));
  return reports;
}

}  // namespace

std::vector<VerificationReport> run_lower_campaign(QRange range,
                                                   const CampaignOptions& opts,
                                                   const ReportSink& sink) {
  return run_parallel(range, opts, sink, lower_checks);
}

std::vector<VerificationReport> run_lower_campaign_serial(
    QRange range, const CampaignOptions& opts, const ReportSink& sink) {
  (void)opts;
  return run_serial(range, sink, lower_checks);
}

std::vector<VerificationReport> run_better_campaign(QRange range,
                                                    const CampaignOptions& opts,
                                                    const ReportSink& sink) {
  return run_parallel(range, opts, sink, [&opts](int q) {
    return PerQ{verify_better_bound(q, opts.sign)};
  });
}

std::vector<VerificationReport> run_better_campaign_serial(
    QRange range, const CampaignOptions& opts, const ReportSink& sink) {
  return run_serial(range, sink, [&opts](int q) {
    return PerQ{verify_better_bound(q, opts.sign)};
  });
}

}  // namespace vsmooth::exact
