#include "inar/cls.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace inar {

Mat2 DesignAccumulators::F() const noexcept {
    return {{{static_cast<double>(sum_x1x1), static_cast<double>(sum_x1x2)},
             {static_cast<double>(sum_x1x2), static_cast<double>(sum_x2x2)}}};
}

Vec2 DesignAccumulators::g() const noexcept {
    return {static_cast<double>(sum_xx1) - mu_eps * static_cast<double>(sum_x1),
            static_cast<double>(sum_xx2) - mu_eps * static_cast<double>(sum_x2)};
}

Mat2 DesignAccumulators::A() const noexcept {
    // T F T^T with T = [[1, 0], [-1, 1]]; entries from the integer sums.
    const long long a11 = sum_x1x1;
    const long long a12 = -(sum_x1x1 - sum_x1x2);           // -sum X_{k-1} V_{k-1}
    const long long a22 = sum_x1x1 - 2 * sum_x1x2 + sum_x2x2;  // sum V_{k-1}^2
    return {{{static_cast<double>(a11), static_cast<double>(a12)},
             {static_cast<double>(a12), static_cast<double>(a22)}}};
}

Vec2 DesignAccumulators::b() const noexcept {
    const Vec2 gv = g();
    return {gv[0], -(gv[0] - gv[1])};
}

Vec2 DesignAccumulators::d(double alpha, double beta) const noexcept {
    const double mx1 = static_cast<double>(sum_xx1) - alpha * static_cast<double>(sum_x1x1) -
                       beta * static_cast<double>(sum_x1x2) - mu_eps * static_cast<double>(sum_x1);
    const double mv1 = static_cast<double>(sum_xx1 - sum_xx2) -
                       alpha * static_cast<double>(sum_x1x1 - sum_x1x2) -
                       beta * static_cast<double>(sum_x1x2 - sum_x2x2) -
                       mu_eps * static_cast<double>(sum_x1 - sum_x2);
    return {mx1, -mv1};
}

double DesignAccumulators::det_f() const noexcept {
    const __int128 det = static_cast<__int128>(sum_x1x1) * sum_x2x2 -
                         static_cast<__int128>(sum_x1x2) * sum_x1x2;
    return static_cast<double>(det);
}

DesignAccumulators accumulate_design(std::span<const long long> values, double mu_eps) {
    if (values.size() < 3 || values[0] != 0 || values[1] != 0)
        throw std::invalid_argument("values must hold X_{-1} = X_0 = 0 followed by X_1..X_n");
    DesignAccumulators acc;
    acc.mu_eps = mu_eps;
    acc.n = static_cast<long long>(values.size()) - 2;
    for (long long k = 1; k <= acc.n; ++k) {
        const long long xk = values[static_cast<std::size_t>(k + 1)];
        const long long x1 = values[static_cast<std::size_t>(k)];
        const long long x2 = values[static_cast<std::size_t>(k - 1)];
        acc.sum_x1x1 += x1 * x1;
        acc.sum_x1x2 += x1 * x2;
        acc.sum_x2x2 += x2 * x2;
        acc.sum_xx1 += xk * x1;
        acc.sum_xx2 += xk * x2;
        acc.sum_x1 += x1;
        acc.sum_x2 += x2;
    }
    return acc;
}

DesignAccumulators accumulate_design(const Trajectory& traj, double mu_eps) {
    return accumulate_design(std::span<const long long>(traj.values), mu_eps);
}

std::string to_string(EstimateCase c) {
    switch (c) {
        case EstimateCase::Regular: return "regular";
        case EstimateCase::DegenerateLastOnly: return "degenerate_last_only";
        default: return "undefined";
    }
}

EstimateResult estimate_cls(std::span<const long long> values, double mu_eps) {
    EstimateResult result;
    result.accumulators = accumulate_design(values, mu_eps);
    const DesignAccumulators& acc = result.accumulators;
    if (acc.n < 3) throw std::invalid_argument("CLS estimation requires n >= 3");
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (acc.sum_sq_lag2() > 0) {
        const double det = acc.det_f();
        if (det == 0.0) {  // cannot occur when sum_sq_lag2 > 0; guarded anyway
            result.estimate_case = EstimateCase::Undefined;
            result.alpha_hat = result.beta_hat = result.rho_hat = nan;
            return result;
        }
        const Mat2 f = acc.F();
        const Vec2 gv = acc.g();
        result.alpha_hat = (f[1][1] * gv[0] - f[0][1] * gv[1]) / det;
        result.beta_hat = (f[0][0] * gv[1] - f[0][1] * gv[0]) / det;
        result.rho_hat = result.alpha_hat + result.beta_hat;
        result.estimate_case = EstimateCase::Regular;
        return result;
    }
    const long long n = acc.n;
    const long long x_last = values[static_cast<std::size_t>(n)];      // X_{n-1}
    const long long x_final = values[static_cast<std::size_t>(n + 1)];  // X_n
    if (x_last != 0) {
        // beta_hat fixed to 0 by convention; the paper leaves it arbitrary.
        result.alpha_hat = (static_cast<double>(x_final) - mu_eps) / static_cast<double>(x_last);
        result.beta_hat = 0.0;
        result.rho_hat = result.alpha_hat;
        result.estimate_case = EstimateCase::DegenerateLastOnly;
    } else {
        result.alpha_hat = result.beta_hat = result.rho_hat = nan;
        result.estimate_case = EstimateCase::Undefined;
    }
    return result;
}

EstimateResult estimate_cls(const Trajectory& traj, double mu_eps) {
    return estimate_cls(std::span<const long long>(traj.values), mu_eps);
}

double objective_q(std::span<const long long> values, double alpha_prime, double beta_prime,
                   double mu_eps) {
    const long long n = static_cast<long long>(values.size()) - 2;
    double q = 0.0;
    for (long long k = 1; k <= n; ++k) {
        const double r = static_cast<double>(values[static_cast<std::size_t>(k + 1)]) -
                         alpha_prime * static_cast<double>(values[static_cast<std::size_t>(k)]) -
                         beta_prime * static_cast<double>(values[static_cast<std::size_t>(k - 1)]) -
                         mu_eps;
        q += r * r;
    }
    return q;
}

std::optional<Vec2> estimate_rho_beta(std::span<const long long> values, double mu_eps) {
    const DesignAccumulators acc = accumulate_design(values, mu_eps);
    if (acc.sum_sq_lag2() <= 0) return std::nullopt;
    const Mat2 a = acc.A();
    const Vec2 bv = acc.b();
    const double det = a[0][0] * a[1][1] - a[0][1] * a[0][1];
    if (det == 0.0) return std::nullopt;
    return Vec2{(a[1][1] * bv[0] - a[0][1] * bv[1]) / det,
                (a[0][0] * bv[1] - a[0][1] * bv[0]) / det};
}

Vec2 scaled_error_statistics(const EstimateResult& result, long long n,
                             const AutoregressiveParams& true_params, const ModelClass& cls) {
    if (cls.stability != Stability::Unstable)
        throw std::invalid_argument("scaled error statistics are defined for the unstable class only");
    if (result.estimate_case != EstimateCase::Regular)
        throw std::invalid_argument("scaled error statistics require a regular estimate");
    const double nd = static_cast<double>(n);
    const double rho_err = result.rho_hat - 1.0;
    switch (cls.regularity) {
        case Regularity::PositivelyRegular:
            return {nd * rho_err, std::sqrt(nd) * (result.beta_hat - true_params.beta())};
        case Regularity::Decomposable:
            return {std::pow(nd, 1.5) * rho_err, std::sqrt(nd) * result.beta_hat};
        default:
            return {std::pow(nd, 1.5) * rho_err, nd * (result.beta_hat - 1.0)};
    }
}

ScaledDesign scaled_design_statistics(const DesignAccumulators& accum, double alpha, double beta,
                                      long long n, const ModelClass& cls) {
    if (cls.stability != Stability::Unstable)
        throw std::invalid_argument("scaled design statistics are defined for the unstable class only");
    const double nd = static_cast<double>(n);
    Vec2 a_scale{}, d_scale{};
    switch (cls.regularity) {
        case Regularity::PositivelyRegular:
            a_scale = {std::pow(nd, -1.5), 1.0 / nd};
            d_scale = {std::pow(nd, -2.0), std::pow(nd, -1.5)};
            break;
        case Regularity::Decomposable:
            a_scale = {std::pow(nd, -1.5), std::pow(nd, -0.5)};
            d_scale = a_scale;
            break;
        default:
            a_scale = {std::pow(nd, -1.5), 1.0 / nd};
            d_scale = a_scale;
            break;
    }
    const Mat2 a = accum.A();
    const Vec2 d = accum.d(alpha, beta);
    ScaledDesign out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.a_tilde[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                a_scale[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                a_scale[static_cast<std::size_t>(j)];
    out.d_tilde = {d_scale[0] * d[0], d_scale[1] * d[1]};
    return out;
}

std::optional<double> ar1_ols_statistic(std::span<const double> y) {
    const std::size_t n = y.size();
    if (n < 2) throw std::invalid_argument("AR(1) OLS statistic requires length >= 2");
    double num = 0.0, den = 0.0;
    // Y_0 = 0, so the k = 1 term vanishes in both sums.
    for (std::size_t k = 2; k <= n; ++k) {
        num += y[k - 2] * y[k - 1];
        den += y[k - 2] * y[k - 2];
    }
    if (den == 0.0) return std::nullopt;
    return static_cast<double>(n) * (num / den - 1.0);
}

double existence_fraction(std::span<const Trajectory> batch) {
    if (batch.empty()) throw std::invalid_argument("existence fraction requires a nonempty batch");
    std::size_t count = 0;
    for (const Trajectory& traj : batch) {
        const DesignAccumulators acc = accumulate_design(traj, 0.0);
        if (acc.sum_sq_lag2() > 0) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(batch.size());
}

std::string estimate_to_json(const EstimateResult& result) {
    nlohmann::json j;
    j["alpha_hat"] = result.alpha_hat;
    j["beta_hat"] = result.beta_hat;
    j["rho_hat"] = result.rho_hat;
    j["case"] = to_string(result.estimate_case);
    j["n"] = result.accumulators.n;
    j["det_f"] = result.accumulators.det_f();
    j["sum_sq_lag2"] = result.accumulators.sum_sq_lag2();
    return j.dump();
}

}  // namespace inar
