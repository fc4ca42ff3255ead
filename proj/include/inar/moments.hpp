#ifndef INAR_MOMENTS_HPP
#define INAR_MOMENTS_HPP

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "inar/model.hpp"
#include "inar/trajectory.hpp"

namespace inar {

// E(M_k^2 | F_{k-1}) and E(M_k^3 | F_{k-1}) given the history pair
// (X_{k-1}, X_{k-2}):
//   second = alpha(1-alpha) X_{k-1} + beta(1-beta) X_{k-2} + sigma^2
//   third  = a3 X_{k-1} + b3 X_{k-2} + E(eps - mu)^3
// with the centered Bernoulli third moments a3 = alpha(1-alpha)(1-2 alpha),
// b3 = beta(1-beta)(1-2 beta).
struct ConditionalMoments {
    double second = 0.0;
    double third = 0.0;
};

ConditionalMoments conditional_moments_at(const AutoregressiveParams& params,
                                          const InnovationModel& innovation, long long x_prev,
                                          long long x_prev2);

// Per-k conditional moments along a trajectory, k = 1..n.
std::vector<ConditionalMoments> martingale_conditional_moments(const Trajectory& traj,
                                                               const InnovationModel& innovation);

// E((zeta_1 + ... + zeta_N)^ell). Centered case (E zeta = 0) supports
// ell = 1..6 via the explicit polynomials R_ell; the uncentered case
// supports ell = 1..4 via multinomial expansion. moments[j-1] = E(zeta^j).
double iid_sum_moments(std::span<const double> moments, double n_terms, int ell, bool centered);

// Exact joint moments E(X_n^{l1} X_{n-1}^{l2}), l1 + l2 <= order, for the
// unstable process, iterated from zero initial moments. Order capped at 2
// (the higher-order recursion matrices have no closed published form).
struct MomentTable {
    int order = 1;
    std::vector<double> e_x;    // E X_n
    std::vector<double> e_xx;   // E X_n^2        (order 2)
    std::vector<double> e_xy;   // E X_n X_{n-1}  (order 2)
    std::vector<double> e_yy;   // E X_{n-1}^2    (order 2)
};

MomentTable exact_joint_moments(const AutoregressiveParams& params,
                                const InnovationModel& innovation, long long n, int order);

// CSV `n,e_x,e_xx,e_xy,e_yy`.
void write_moment_table_csv(std::ostream& os, const MomentTable& table);

// Least-squares log-log slope fit with the +0.15 tolerance pass rule.
struct GrowthFit {
    double slope = 0.0;
    bool pass = false;
};

GrowthFit growth_bound_check(std::span<const double> n_grid, std::span<const double> values,
                             double claimed_exponent);

// Mean of n^{-kappa} sum |U_k^i V_k^j| over a trajectory batch, plus a
// Spearman trend check across the n-grid (negative correlation required).
struct ScaledSupDiagnostics {
    std::vector<double> statistic;  // one entry per n in the grid
    double spearman = 0.0;
    bool decreasing = false;
};

ScaledSupDiagnostics scaled_sup_diagnostics(const AutoregressiveParams& params,
                                            const InnovationModel& innovation,
                                            std::span<const long long> n_grid, long long replications,
                                            int i, int j, double kappa, std::uint64_t seed);

double spearman_correlation(std::span<const double> x, std::span<const double> y);

}  // namespace inar

#endif
