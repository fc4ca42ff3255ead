#ifndef INAR_CLS_HPP
#define INAR_CLS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "inar/model.hpp"
#include "inar/trajectory.hpp"

namespace inar {

using Mat2 = std::array<std::array<double, 2>, 2>;
using Vec2 = std::array<double, 2>;

// Design sums of the CLS normal equations; the raw integer sums are kept
// so that identities like A = T F T^T can be checked exactly.
struct DesignAccumulators {
    // Exact integer sums over k = 1..n with the x_{-1} = x_0 = 0 convention.
    long long sum_x1x1 = 0;   // sum X_{k-1}^2
    long long sum_x1x2 = 0;   // sum X_{k-1} X_{k-2}
    long long sum_x2x2 = 0;   // sum X_{k-2}^2
    long long sum_xx1 = 0;    // sum X_k X_{k-1}
    long long sum_xx2 = 0;    // sum X_k X_{k-2}
    long long sum_x1 = 0;     // sum X_{k-1}
    long long sum_x2 = 0;     // sum X_{k-2}
    long long n = 0;
    double mu_eps = 0.0;

    long long sum_sq_lag2() const noexcept { return sum_x2x2; }

    Mat2 F() const noexcept;        // sum [[X_{k-1}^2, X_{k-1}X_{k-2}], [., X_{k-2}^2]]
    Vec2 g() const noexcept;        // sum [(X_k - mu) X_{k-1}, (X_k - mu) X_{k-2}]
    Mat2 A() const noexcept;        // canonical-form design matrix (T F T^T)
    Vec2 b() const noexcept;        // sum [(X_k - mu) X_{k-1}, -(X_k - mu) V_{k-1}]
    Vec2 d(double alpha, double beta) const noexcept;  // sum [M_k X_{k-1}, -M_k V_{k-1}]
    double det_f() const noexcept;  // determinant from the exact integer sums
};

DesignAccumulators accumulate_design(std::span<const long long> values, double mu_eps);
DesignAccumulators accumulate_design(const Trajectory& traj, double mu_eps);

enum class EstimateCase { Regular, DegenerateLastOnly, Undefined };

std::string to_string(EstimateCase c);

struct EstimateResult {
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    double rho_hat = 0.0;
    EstimateCase estimate_case = EstimateCase::Undefined;
    DesignAccumulators accumulators;
};

// Closed-form CLS estimator of (alpha, beta). Regular when
// sum X_{k-2}^2 > 0; when only x_{n-1} is nonzero the estimator
// degenerates to alpha_hat = (x_n - mu)/x_{n-1} with beta_hat fixed
// to 0; fully undefined when x_1 = ... = x_{n-1} = 0.
EstimateResult estimate_cls(std::span<const long long> values, double mu_eps);
EstimateResult estimate_cls(const Trajectory& traj, double mu_eps);

// Q_n(x; alpha', beta') = sum (x_k - alpha' x_{k-1} - beta' x_{k-2} - mu)^2.
double objective_q(std::span<const long long> values, double alpha_prime, double beta_prime,
                   double mu_eps);

// (rho_hat, beta_hat) computed directly as A^{-1} b; equals
// [1 1; 0 1] (alpha_hat, beta_hat) whenever defined.
std::optional<Vec2> estimate_rho_beta(std::span<const long long> values, double mu_eps);

// Case-specific scaled estimation errors:
//   positively regular:      (n (rho_hat - 1), sqrt(n) (beta_hat - beta))
//   decomposable:            (n^{3/2} (rho_hat - 1), sqrt(n) beta_hat)
//   indecomposable, not pr:  (n^{3/2} (rho_hat - 1), n (beta_hat - 1))
Vec2 scaled_error_statistics(const EstimateResult& result, long long n,
                             const AutoregressiveParams& true_params, const ModelClass& cls);

// Scaled design pair (A~_n, d~_n) with the case-specific diagonals.
struct ScaledDesign {
    Mat2 a_tilde;
    Vec2 d_tilde;
};
ScaledDesign scaled_design_statistics(const DesignAccumulators& accum, double alpha, double beta,
                                      long long n, const ModelClass& cls);

// n (rho_hat - 1) for AR(1) OLS with rho_hat = sum Y_{k-1} Y_k / sum Y_{k-1}^2,
// Y_0 = 0 convention; y holds Y_1..Y_n. Empty optional when the
// denominator vanishes.
std::optional<double> ar1_ols_statistic(std::span<const double> y);

// Fraction of trajectories whose CLS estimator exists (sum X_{k-2}^2 > 0).
double existence_fraction(std::span<const Trajectory> batch);

// JSON per the EstimateResult schema:
// {alpha_hat, beta_hat, rho_hat, case, n, det_f, sum_sq_lag2}.
std::string estimate_to_json(const EstimateResult& result);

}  // namespace inar

#endif
