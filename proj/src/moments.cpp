#include "inar/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace inar {

ConditionalMoments conditional_moments_at(const AutoregressiveParams& params,
                                          const InnovationModel& innovation, long long x_prev,
                                          long long x_prev2) {
    const double a = params.alpha();
    const double b = params.beta();
    const double x1 = static_cast<double>(x_prev);
    const double x2 = static_cast<double>(x_prev2);
    ConditionalMoments m;
    m.second = a * (1.0 - a) * x1 + b * (1.0 - b) * x2 + innovation.variance();
    // Centered Bernoulli third moment p(1-p)(1-2p).
    m.third = a * (1.0 - a) * (1.0 - 2.0 * a) * x1 + b * (1.0 - b) * (1.0 - 2.0 * b) * x2 +
              innovation.centered_third();
    return m;
}

std::vector<ConditionalMoments> martingale_conditional_moments(const Trajectory& traj,
                                                               const InnovationModel& innovation) {
    std::vector<ConditionalMoments> out;
    out.reserve(static_cast<std::size_t>(traj.n()));
    for (long long k = 1; k <= traj.n(); ++k)
        out.push_back(conditional_moments_at(traj.params, innovation, traj.x(k - 1), traj.x(k - 2)));
    return out;
}

double iid_sum_moments(std::span<const double> moments, double n_terms, int ell, bool centered) {
    if (ell < 1 || ell > 6) throw std::invalid_argument("iid sum moments support ell = 1..6 only");
    if (static_cast<int>(moments.size()) < ell)
        throw std::invalid_argument("moments up to order ell are required");
    const double x = n_terms;
    auto m = [&](int j) { return moments[static_cast<std::size_t>(j - 1)]; };
    if (centered) {
        switch (ell) {
            case 1: return 0.0;
            case 2: return m(2) * x;
            case 3: return m(3) * x;
            case 4: return m(4) * x + 3.0 * m(2) * m(2) * x * (x - 1.0);
            case 5: return m(5) * x + 10.0 * m(3) * m(2) * x * (x - 1.0);
            default:
                return m(6) * x + 15.0 * m(4) * m(2) * x * (x - 1.0) +
                       10.0 * m(3) * m(3) * x * (x - 1.0) +
                       15.0 * m(2) * m(2) * m(2) * x * (x - 1.0) * (x - 2.0);
        }
    }
    if (ell > 4)
        throw std::invalid_argument("uncentered iid sum moments support ell = 1..4 only");
    const double f1 = x;
    const double f2 = x * (x - 1.0);
    const double f3 = f2 * (x - 2.0);
    const double f4 = f3 * (x - 3.0);
    switch (ell) {
        case 1: return m(1) * f1;
        case 2: return m(2) * f1 + m(1) * m(1) * f2;
        case 3: return m(3) * f1 + 3.0 * m(2) * m(1) * f2 + m(1) * m(1) * m(1) * f3;
        default:
            return m(4) * f1 + 4.0 * m(3) * m(1) * f2 + 3.0 * m(2) * m(2) * f2 +
                   6.0 * m(2) * m(1) * m(1) * f3 + m(1) * m(1) * m(1) * m(1) * f4;
    }
}

MomentTable exact_joint_moments(const AutoregressiveParams& params,
                                const InnovationModel& innovation, long long n, int order) {
    if (order < 1 || order > 2)
        throw std::invalid_argument("exact joint moments support order 1 and 2 only");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (std::abs(params.rho() - 1.0) > 1e-12)
        throw std::invalid_argument("exact joint moments require the unstable case rho = 1");
    const double a = params.alpha();
    const double b = params.beta();
    const double mu = innovation.mean();
    const double m2 = innovation.raw_moment(2);

    MomentTable table;
    table.order = order;
    table.e_x.resize(static_cast<std::size_t>(n) + 1, 0.0);
    if (order == 2) {
        table.e_xx.resize(static_cast<std::size_t>(n) + 1, 0.0);
        table.e_xy.resize(static_cast<std::size_t>(n) + 1, 0.0);
        table.e_yy.resize(static_cast<std::size_t>(n) + 1, 0.0);
    }

    // v1 = (E X_k, E X_{k-1}); v2 = (E X_k^2, E X_k X_{k-1}, E X_{k-1}^2).
    std::array<double, 2> v1{0.0, 0.0};
    std::array<double, 3> v2{0.0, 0.0, 0.0};
    for (long long k = 1; k <= n; ++k) {
        if (order == 2) {
            // A_2 v2 + B_{2,1} v1 + (E eps^2, 0, 0)
            const std::array<double, 3> next2{
                a * a * v2[0] + 2.0 * a * b * v2[1] + b * b * v2[2] +
                    (a * b + 2.0 * a * mu) * v1[0] + (a * b + 2.0 * b * mu) * v1[1] + m2,
                a * v2[0] + b * v2[1] + mu * v1[0],
                v2[0]};
            v2 = next2;
        }
        const std::array<double, 2> next1{a * v1[0] + b * v1[1] + mu, v1[0]};
        v1 = next1;
        table.e_x[static_cast<std::size_t>(k)] = v1[0];
        if (order == 2) {
            table.e_xx[static_cast<std::size_t>(k)] = v2[0];
            table.e_xy[static_cast<std::size_t>(k)] = v2[1];
            table.e_yy[static_cast<std::size_t>(k)] = v2[2];
        }
    }
    return table;
}

void write_moment_table_csv(std::ostream& os, const MomentTable& table) {
    os << "n,e_x,e_xx,e_xy,e_yy\n";
    for (std::size_t k = 1; k < table.e_x.size(); ++k) {
        os << k << ',' << table.e_x[k] << ',';
        if (table.order == 2)
            os << table.e_xx[k] << ',' << table.e_xy[k] << ',' << table.e_yy[k] << '\n';
        else
            os << ",,\n";
    }
}

GrowthFit growth_bound_check(std::span<const double> n_grid, std::span<const double> values,
                             double claimed_exponent) {
    if (n_grid.size() != values.size() || n_grid.size() < 3)
        throw std::invalid_argument("growth fit requires matching grids of length >= 3");
    const std::size_t m = n_grid.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double lx = std::log(n_grid[i]);
        const double ly = std::log(std::max(values[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double md = static_cast<double>(m);
    GrowthFit fit;
    fit.slope = (md * sxy - sx * sy) / (md * sxx - sx * sx);
    fit.pass = fit.slope <= claimed_exponent + 0.15;
    return fit;
}

double spearman_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("spearman requires matching samples of length >= 2");
    const std::size_t n = x.size();
    auto ranks = [n](std::span<const double> v) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[idx[i]] = static_cast<double>(i);
        return r;
    };
    const std::vector<double> rx = ranks(x);
    const std::vector<double> ry = ranks(y);
    double sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += rx[i];
        sy += ry[i];
        sxx += rx[i] * rx[i];
        syy += ry[i] * ry[i];
        sxy += rx[i] * ry[i];
    }
    const double nd = static_cast<double>(n);
    const double cov = sxy - sx * sy / nd;
    const double vx = sxx - sx * sx / nd;
    const double vy = syy - sy * sy / nd;
    return cov / std::sqrt(vx * vy);
}

ScaledSupDiagnostics scaled_sup_diagnostics(const AutoregressiveParams& params,
                                            const InnovationModel& innovation,
                                            std::span<const long long> n_grid, long long replications,
                                            int i, int j, double kappa, std::uint64_t seed) {
    if (!(kappa > static_cast<double>(i) + static_cast<double>(j) / 2.0 + 1.0))
        throw std::invalid_argument("kappa must exceed i + j/2 + 1");
    if (replications < 1) throw std::invalid_argument("replications must be >= 1");
    ScaledSupDiagnostics out;
    out.statistic.reserve(n_grid.size());
    for (std::size_t gi = 0; gi < n_grid.size(); ++gi) {
        const long long n = n_grid[gi];
        double mean = 0.0;
        for (long long r = 0; r < replications; ++r) {
            const Trajectory traj =
                simulate(params, innovation, n, CounterRng::stream(seed, static_cast<std::uint64_t>(r)).next_u64());
            const DerivedSequences d = derived_sequences(traj, innovation.mean());
            double acc = 0.0;
            for (long long k = 1; k <= n; ++k) {
                acc += std::pow(std::abs(d.U[static_cast<std::size_t>(k)]), static_cast<double>(i)) *
                       std::pow(std::abs(d.V[static_cast<std::size_t>(k)]), static_cast<double>(j));
            }
            mean += acc * std::pow(static_cast<double>(n), -kappa);
        }
        out.statistic.push_back(mean / static_cast<double>(replications));
    }
    std::vector<double> ns(n_grid.size());
    for (std::size_t gi = 0; gi < n_grid.size(); ++gi) ns[gi] = static_cast<double>(n_grid[gi]);
    out.spearman = spearman_correlation(ns, out.statistic);
    out.decreasing = out.spearman < 0.0;
    return out;
}

}  // namespace inar
