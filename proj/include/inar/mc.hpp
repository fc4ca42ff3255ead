#ifndef INAR_MC_HPP
#define INAR_MC_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "inar/cls.hpp"
#include "inar/limit_laws.hpp"
#include "inar/model.hpp"
#include "inar/trajectory.hpp"

namespace inar {

// Index-parallel loop; results must be written by index so serial and
// parallel runs agree bit for bit. threads <= 1 runs inline.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

// Two-sample sup-norm distance of the empirical CDFs (merge scan).
double ks_distance(std::span<const double> sample_a, std::span<const double> sample_b);

// Empirical quantile with linear interpolation; sample need not be sorted.
double quantile(std::span<const double> sample, double q);

struct CampaignConfig {
    AutoregressiveParams params{0.6, 0.4};
    InnovationModel innovation = InnovationModel::poisson(2.0);
    long long n = 500;
    long long replications = 1000;
    std::uint64_t master_seed = 0;
    long long mesh = 10000;
    long long limit_replications = 10000;
    unsigned threads = 1;
};

struct SampleSummary {
    double mean = 0.0;
    double variance = 0.0;
    std::vector<double> quantiles;  // 1, 5, 25, 50, 75, 95, 99 percent
};

struct ComparisonReport {
    double ks = 0.0;
    SampleSummary empirical;
    SampleSummary limit;
    long long undefined_count = 0;
    long long degenerate_count = 0;
    long long n = 0;
    long long replications = 0;
    long long mesh = 0;
    long long limit_replications = 0;
    std::uint64_t master_seed = 0;
    std::string regime;
};

struct CampaignResult {
    std::vector<double> statistic1;  // scaled rho statistic per replication
    std::vector<double> statistic2;  // scaled beta statistic per replication
    std::vector<double> limit_draws;
    ComparisonReport report;
};

// Simulate -> estimate -> scale, then compare the scaled rho statistic
// against draws from the matching limit law by two-sample KS. Undefined
// estimates are excluded and counted; aborts if they exceed 5%.
CampaignResult run_campaign(const CampaignConfig& config);

// Existence fraction of the CLS estimator per n in the grid.
std::vector<double> existence_sweep(const AutoregressiveParams& params,
                                    const InnovationModel& innovation,
                                    std::span<const long long> n_grid, long long replications,
                                    std::uint64_t seed, unsigned threads = 1);

std::string report_to_json(const ComparisonReport& report);
void write_campaign_samples_csv(std::ostream& os, const CampaignResult& result);

}  // namespace inar

#endif
