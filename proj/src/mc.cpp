#include "inar/mc.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace inar {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, begin, end] {
            for (std::size_t i = begin; i < end; ++i) body(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

double ks_distance(std::span<const double> sample_a, std::span<const double> sample_b) {
    if (sample_a.empty() || sample_b.empty())
        throw std::invalid_argument("KS distance requires nonempty samples");
    std::vector<double> a(sample_a.begin(), sample_a.end());
    std::vector<double> b(sample_b.begin(), sample_b.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t ia = 0, ib = 0;
    double d = 0.0;
    while (ia < a.size() && ib < b.size()) {
        const double x = std::min(a[ia], b[ib]);
        while (ia < a.size() && a[ia] <= x) ++ia;
        while (ib < b.size() && b[ib] <= x) ++ib;
        d = std::max(d, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
    }
    return d;
}

double quantile(std::span<const double> sample, double q) {
    if (sample.empty()) throw std::invalid_argument("quantile of an empty sample");
    std::vector<double> s(sample.begin(), sample.end());
    std::sort(s.begin(), s.end());
    const double pos = q * static_cast<double>(s.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, s.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return s[lo] * (1.0 - frac) + s[hi] * frac;
}

namespace {

constexpr double kQuantileLevels[] = {0.01, 0.05, 0.25, 0.50, 0.75, 0.95, 0.99};

SampleSummary summarize(std::span<const double> sample) {
    SampleSummary s;
    double mean = 0.0;
    for (double v : sample) mean += v;
    mean /= static_cast<double>(sample.size());
    double var = 0.0;
    for (double v : sample) var += (v - mean) * (v - mean);
    var /= static_cast<double>(sample.size() - 1);
    s.mean = mean;
    s.variance = var;
    for (double q : kQuantileLevels) s.quantiles.push_back(quantile(sample, q));
    return s;
}

std::uint64_t sub_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index) {
    return mix64(mix64(master ^ tag) ^ index);
}

constexpr std::uint64_t kTrajectoryTag = 0x7472616a6563ULL;
constexpr std::uint64_t kLimitTag = 0x6c696d6974ULL;

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config) {
    if (config.replications < 100) throw std::invalid_argument("campaign requires R >= 100");
    if (config.n < 10) throw std::invalid_argument("campaign requires n >= 10");
    const ModelClass cls = classify(config.params);
    if (cls.stability != Stability::Unstable)
        throw std::invalid_argument("campaigns compare unstable-case scaled statistics only");

    const std::size_t reps = static_cast<std::size_t>(config.replications);
    const double mu = config.innovation.mean();
    std::vector<double> stat1(reps), stat2(reps);
    std::vector<char> defined(reps, 0);
    parallel_for(reps, config.threads, [&](std::size_t i) {
        const Trajectory traj = simulate(config.params, config.innovation, config.n,
                                         sub_seed(config.master_seed, kTrajectoryTag, i));
        const EstimateResult est = estimate_cls(traj, mu);
        if (est.estimate_case == EstimateCase::Regular) {
            const Vec2 scaled = scaled_error_statistics(est, config.n, config.params, cls);
            stat1[i] = scaled[0];
            stat2[i] = scaled[1];
            defined[i] = 1;
        }
    });

    const double sigma2 = config.innovation.variance();
    const std::size_t limit_reps = static_cast<std::size_t>(config.limit_replications);
    std::vector<double> limit(limit_reps);
    std::vector<char> limit_ok(limit_reps, 1);
    parallel_for(limit_reps, config.threads, [&](std::size_t i) {
        const std::uint64_t seed = sub_seed(config.master_seed, kLimitTag, i);
        switch (cls.regularity) {
            case Regularity::PositivelyRegular: {
                const LimitSample s = limit_rho_positively_regular(
                    config.params.alpha(), config.params.beta(), mu, config.mesh, seed);
                limit[i] = s.value1;
                limit_ok[i] = s.degenerate ? 0 : 1;
                break;
            }
            case Regularity::Decomposable:
                limit[i] = limit_rho_decomposable(mu, sigma2, seed).value1;
                break;
            default:
                limit[i] = limit_rho_indecomposable(mu, sigma2, seed).value1;
                break;
        }
    });

    CampaignResult result;
    result.statistic1.reserve(reps);
    result.statistic2.reserve(reps);
    long long undefined = 0;
    for (std::size_t i = 0; i < reps; ++i) {
        if (defined[i]) {
            result.statistic1.push_back(stat1[i]);
            result.statistic2.push_back(stat2[i]);
        } else {
            ++undefined;
        }
    }
    if (static_cast<double>(undefined) > 0.05 * static_cast<double>(reps))
        throw std::runtime_error("more than 5% of replications were undefined; n is too small");
    long long degenerate = 0;
    result.limit_draws.reserve(limit_reps);
    for (std::size_t i = 0; i < limit_reps; ++i) {
        if (limit_ok[i])
            result.limit_draws.push_back(limit[i]);
        else
            ++degenerate;
    }
    if (result.limit_draws.empty()) throw std::runtime_error("all limit draws were degenerate");

    ComparisonReport& rep = result.report;
    rep.ks = ks_distance(result.statistic1, result.limit_draws);
    rep.empirical = summarize(result.statistic1);
    rep.limit = summarize(result.limit_draws);
    rep.undefined_count = undefined;
    rep.degenerate_count = degenerate;
    rep.n = config.n;
    rep.replications = config.replications;
    rep.mesh = config.mesh;
    rep.limit_replications = config.limit_replications;
    rep.master_seed = config.master_seed;
    rep.regime = to_string(cls.regularity);
    return result;
}

std::vector<double> existence_sweep(const AutoregressiveParams& params,
                                    const InnovationModel& innovation,
                                    std::span<const long long> n_grid, long long replications,
                                    std::uint64_t seed, unsigned threads) {
    if (classify(params).stability != Stability::Unstable)
        throw std::invalid_argument("existence sweep targets the unstable class");
    std::vector<double> fractions;
    fractions.reserve(n_grid.size());
    for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
        const long long n = n_grid[gi];
        const std::size_t reps = static_cast<std::size_t>(replications);
        std::vector<char> exists(reps, 0);
        parallel_for(reps, threads, [&](std::size_t i) {
            const Trajectory traj =
                simulate(params, innovation, n, sub_seed(seed, kTrajectoryTag + gi, i));
            exists[i] = accumulate_design(traj, innovation.mean()).sum_sq_lag2() > 0 ? 1 : 0;
        });
        long long count = 0;
        for (char e : exists) count += e;
        fractions.push_back(static_cast<double>(count) / static_cast<double>(reps));
    }
    return fractions;
}

std::string report_to_json(const ComparisonReport& report) {
    nlohmann::json j;
    j["ks_distance"] = report.ks;
    j["regime"] = report.regime;
    j["n"] = report.n;
    j["replications"] = report.replications;
    j["mesh"] = report.mesh;
    j["limit_replications"] = report.limit_replications;
    j["master_seed"] = report.master_seed;
    j["undefined_count"] = report.undefined_count;
    j["degenerate_count"] = report.degenerate_count;
    auto summary = [](const SampleSummary& s) {
        nlohmann::json out;
        out["mean"] = s.mean;
        out["variance"] = s.variance;
        out["quantiles"] = {{"p01", s.quantiles[0]}, {"p05", s.quantiles[1]},
                            {"p25", s.quantiles[2]}, {"p50", s.quantiles[3]},
                            {"p75", s.quantiles[4]}, {"p95", s.quantiles[5]},
                            {"p99", s.quantiles[6]}};
        return out;
    };
    j["empirical"] = summary(report.empirical);
    j["limit"] = summary(report.limit);
    return j.dump(2);
}

void write_campaign_samples_csv(std::ostream& os, const CampaignResult& result) {
    os << "replication,stat1,stat2\n";
    for (std::size_t i = 0; i < result.statistic1.size(); ++i)
        os << i << ',' << result.statistic1[i] << ',' << result.statistic2[i] << '\n';
}

}  // namespace inar
