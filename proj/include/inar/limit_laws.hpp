#ifndef INAR_LIMIT_LAWS_HPP
#define INAR_LIMIT_LAWS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "inar/model.hpp"
#include "inar/rng.hpp"

namespace inar {

// Discretized standard Wiener path on [0, 1]: values[j] = W_{j/m}.
struct WienerPath {
    long long mesh = 0;
    std::vector<double> increments;  // m i.i.d. N(0, 1/m)
    std::vector<double> values;      // partial sums, values[0] = 0
};

// Euler-Maruyama CIR path with full truncation; values[j] >= 0 always.
struct CirPath {
    long long mesh = 0;
    double alpha = 0.0, beta = 0.0, mu = 0.0;
    std::vector<double> values;  // values[0] = 0
};

struct LimitSample {
    double value1 = 0.0;
    double value2 = 0.0;
    Regularity regime = Regularity::PositivelyRegular;
    long long mesh = 0;
    std::uint64_t seed = 0;
    bool degenerate = false;  // denominator below 1e-12, excluded from stats
};

// Distinct sub-streams of one master seed; stream 0 drives the CIR
// diffusion, stream 1 the independent Wiener path.
WienerPath sample_wiener(long long mesh, std::uint64_t seed, std::uint64_t stream_index = 0);

// dX = (mu dt + sqrt(2 alpha beta max(X,0)) dW)/(1+beta), X_0 = 0,
// clamped to 0 after every step (full truncation).
CirPath simulate_cir(double alpha, double beta, double mu, long long mesh, std::uint64_t seed);
CirPath simulate_cir(double alpha, double beta, double mu, const WienerPath& driver);

// M transform of a CIR path: M_j = (1+beta) X_j - mu (j/m), M_0 = 0.
std::vector<double> cir_martingale_transform(const CirPath& path);

// sqrt(2 alpha beta) * Ito(X^{3/2}, dW) / RiemannLeft(X^2): the limit of
// n (rho_hat - 1) in the positively regular case.
LimitSample limit_rho_positively_regular(double alpha, double beta, double mu, long long mesh,
                                         std::uint64_t seed);

// Both formulations of the same ratio, for discretization cross-checks:
// first = sqrt(2 alpha beta) sum X_j^{3/2} dW_j, second = sum X_j dM_j.
// Evaluated on the m-grid over a path simulated at 8x refinement; the two
// values differ by a discretization error that shrinks as m grows.
std::pair<LimitSample, LimitSample> limit_rho_positively_regular_both(double alpha, double beta,
                                                                      double mu, long long mesh,
                                                                      std::uint64_t seed);

// sqrt(alpha (1+beta)) * Ito(X, dW~) / RiemannLeft(X) times (-1, 1)^T.
LimitSample limit_ab_positively_regular(double alpha, double beta, double mu, long long mesh,
                                        std::uint64_t seed);

// Exact Gaussian limits of the decomposable case (parameters (1, 0)).
LimitSample limit_rho_decomposable(double mu, double sigma2, std::uint64_t seed);
LimitSample limit_ab_decomposable(double mu, double sigma2, std::uint64_t seed);
double limit_rho_decomposable_stddev(double mu, double sigma2);
double limit_ab_decomposable_scale(double mu, double sigma2);

// Gaussian limit N(0, 12 sigma^2/mu^2) of the indecomposable case.
LimitSample limit_rho_indecomposable(double mu, double sigma2, std::uint64_t seed);
double limit_rho_indecomposable_stddev(double mu, double sigma2);

// Dickey-Fuller ratio ((W_1^2 - 1)/2) / RiemannLeft(W^2).
LimitSample dickey_fuller_sample(long long mesh, std::uint64_t seed);

// (h(f(1)), (1/n) sum_{k=1..n} K(k/n, f(k/n), f((k-1)/n))) for step
// values f(0), f(1/n), ..., f(1).
std::pair<double, double> riemann_functional(
    std::span<const double> step_values,
    const std::function<double(double, double, double)>& kernel,
    const std::function<double(double)>& terminal);

// CSV `index,case,value1,value2,mesh,seed`.
void write_limit_samples_csv(std::ostream& os, std::span<const LimitSample> samples);

}  // namespace inar

#endif
