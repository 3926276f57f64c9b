#pragma once

#include <functional>
#include <vector>

#include "vsmooth/exact/algebraic.hpp"
#include "vsmooth/exact/report.hpp"

namespace vsmooth::exact {

struct QRange {
  int lo = 2;
  int hi = 2;
};

struct CampaignOptions {
  int jobs = 0;  // 0 = machine parallelism
  SignOptions sign;
};

/// Invoked in ascending q order regardless of completion order; lets long
/// campaigns stream reports incrementally.
using ReportSink = std::function<void(const VerificationReport&)>;

/// Factorization + positivity for every q in the range (two reports per q,
/// factorization first). OpenMP across q.
std::vector<VerificationReport> run_lower_campaign(
    QRange range, const CampaignOptions& opts = {}, const ReportSink& sink = {});

/// Descartes sign-change certificate for every q in the range. OpenMP across q.
std::vector<VerificationReport> run_better_campaign(
    QRange range, const CampaignOptions& opts = {}, const ReportSink& sink = {});

// Serial reference implementations; must produce identical reports (up to
// wall time). Kept for testing and as the benchmark baseline.
std::vector<VerificationReport> run_lower_campaign_serial(
    QRange range, const CampaignOptions& opts = {}, const ReportSink& sink = {});
std::vector<VerificationReport> run_better_campaign_serial(
    QRange range, const CampaignOptions& opts = {}, const ReportSink& sink = {});

}  // namespace vsmooth::exact
