#include "inar/limit_laws.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace inar {

namespace {
constexpr double kDegenerateDenominator = 1e-12;
}

WienerPath sample_wiener(long long mesh, std::uint64_t seed, std::uint64_t stream_index) {
    if (mesh < 2) throw std::invalid_argument("Wiener mesh must be >= 2");
    WienerPath path;
    path.mesh = mesh;
    path.increments.resize(static_cast<std::size_t>(mesh));
    path.values.resize(static_cast<std::size_t>(mesh) + 1);
    CounterRng rng = CounterRng::stream(seed, stream_index);
    const double scale = std::sqrt(1.0 / static_cast<double>(mesh));
    path.values[0] = 0.0;
    for (long long j = 0; j < mesh; ++j) {
        const double dw = scale * rng.normal();
        path.increments[static_cast<std::size_t>(j)] = dw;
        path.values[static_cast<std::size_t>(j + 1)] = path.values[static_cast<std::size_t>(j)] + dw;
    }
    return path;
}

CirPath simulate_cir(double alpha, double beta, double mu, const WienerPath& driver) {
    if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0))
        throw std::invalid_argument("CIR limit requires alpha, beta in (0,1)");
    if (std::abs(alpha + beta - 1.0) > 1e-12)
        throw std::invalid_argument("CIR limit requires alpha + beta = 1");
    if (!(mu >= 0.0)) throw std::invalid_argument("mu must be nonnegative");
    CirPath path;
    path.mesh = driver.mesh;
    path.alpha = alpha;
    path.beta = beta;
    path.mu = mu;
    path.values.resize(static_cast<std::size_t>(driver.mesh) + 1);
    const double dt = 1.0 / static_cast<double>(driver.mesh);
    const double inv = 1.0 / (1.0 + beta);
    const double diff = 2.0 * alpha * beta;
    path.values[0] = 0.0;
    for (long long j = 0; j < driver.mesh; ++j) {
        const double x = path.values[static_cast<std::size_t>(j)];
        double next = x + inv * (mu * dt + std::sqrt(diff * std::max(x, 0.0)) *
                                               driver.increments[static_cast<std::size_t>(j)]);
        path.values[static_cast<std::size_t>(j + 1)] = std::max(next, 0.0);
    }
    return path;
}

CirPath simulate_cir(double alpha, double beta, double mu, long long mesh, std::uint64_t seed) {
    return simulate_cir(alpha, beta, mu, sample_wiener(mesh, seed, 0));
}

std::vector<double> cir_martingale_transform(const CirPath& path) {
    std::vector<double> m(path.values.size());
    const double dt = 1.0 / static_cast<double>(path.mesh);
    for (std::size_t j = 0; j < path.values.size(); ++j)
        m[j] = (1.0 + path.beta) * path.values[j] - path.mu * static_cast<double>(j) * dt;
    return m;
}

LimitSample limit_rho_positively_regular(double alpha, double beta, double mu, long long mesh,
                                         std::uint64_t seed) {
    const WienerPath driver = sample_wiener(mesh, seed, 0);
    const CirPath path = simulate_cir(alpha, beta, mu, driver);
    const double dt = 1.0 / static_cast<double>(mesh);
    double ito_x32 = 0.0, riemann_x2 = 0.0;
    for (long long j = 0; j < mesh; ++j) {
        const double x = path.values[static_cast<std::size_t>(j)];
        ito_x32 += std::pow(x, 1.5) * driver.increments[static_cast<std::size_t>(j)];
        riemann_x2 += x * x * dt;
    }
    LimitSample s;
    s.regime = Regularity::PositivelyRegular;
    s.mesh = mesh;
    s.seed = seed;
    s.degenerate = riemann_x2 < kDegenerateDenominator;
    if (!s.degenerate) s.value1 = std::sqrt(2.0 * alpha * beta) * ito_x32 / riemann_x2;
    return s;
}

std::pair<LimitSample, LimitSample> limit_rho_positively_regular_both(double alpha, double beta,
                                                                      double mu, long long mesh,
                                                                      std::uint64_t seed) {
    // Both functionals evaluated on the requested mesh over a path simulated
    // at 8x refinement. On the coarse grid the diffusion increment is no
    // longer forced to equal sqrt(X) dW, so the two formulations differ by a
    // genuine discretization error that vanishes as the mesh grows.
    constexpr long long kRefine = 8;
    const WienerPath fine_driver = sample_wiener(mesh * kRefine, seed, 0);
    const CirPath fine = simulate_cir(alpha, beta, mu, fine_driver);
    const double dt = 1.0 / static_cast<double>(mesh);
    double ito_x32 = 0.0, ito_x_dm = 0.0, riemann_x2 = 0.0;
    for (long long j = 0; j < mesh; ++j) {
        const double x = fine.values[static_cast<std::size_t>(j * kRefine)];
        const double x_next = fine.values[static_cast<std::size_t>((j + 1) * kRefine)];
        double dw = 0.0;
        for (long long r = 0; r < kRefine; ++r)
            dw += fine_driver.increments[static_cast<std::size_t>(j * kRefine + r)];
        // dM = (1+beta) dX - mu dt over the coarse interval.
        const double dm = (1.0 + beta) * (x_next - x) - mu * dt;
        ito_x32 += std::pow(x, 1.5) * dw;
        ito_x_dm += x * dm;
        riemann_x2 += x * x * dt;
    }
    LimitSample direct;
    direct.regime = Regularity::PositivelyRegular;
    direct.mesh = mesh;
    direct.seed = seed;
    direct.degenerate = riemann_x2 < kDegenerateDenominator;
    LimitSample via_m = direct;
    if (!direct.degenerate) {
        direct.value1 = std::sqrt(2.0 * alpha * beta) * ito_x32 / riemann_x2;
        via_m.value1 = ito_x_dm / riemann_x2;
    }
    return {direct, via_m};
}

LimitSample limit_ab_positively_regular(double alpha, double beta, double mu, long long mesh,
                                        std::uint64_t seed) {
    const WienerPath driver = sample_wiener(mesh, seed, 0);
    const WienerPath independent = sample_wiener(mesh, seed, 1);
    const CirPath path = simulate_cir(alpha, beta, mu, driver);
    const double dt = 1.0 / static_cast<double>(mesh);
    double ito = 0.0, riemann = 0.0;
    for (long long j = 0; j < mesh; ++j) {
        const double x = path.values[static_cast<std::size_t>(j)];
        ito += x * independent.increments[static_cast<std::size_t>(j)];
        riemann += x * dt;
    }
    LimitSample s;
    s.regime = Regularity::PositivelyRegular;
    s.mesh = mesh;
    s.seed = seed;
    s.degenerate = riemann < kDegenerateDenominator;
    if (!s.degenerate) {
        const double ratio = std::sqrt(alpha * (1.0 + beta)) * ito / riemann;
        s.value1 = -ratio;
        s.value2 = ratio;
    }
    return s;
}

double limit_rho_decomposable_stddev(double mu, double sigma2) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    const double mu2 = mu * mu;
    return std::sqrt(12.0 * sigma2 * (mu2 + sigma2) / (mu2 * (mu2 + 4.0 * sigma2)));
}

double limit_ab_decomposable_scale(double mu, double sigma2) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    return 2.0 * std::sqrt(sigma2) / std::sqrt(mu * mu + 4.0 * sigma2);
}

double limit_rho_indecomposable_stddev(double mu, double sigma2) {
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    return std::sqrt(12.0 * sigma2) / mu;
}

LimitSample limit_rho_decomposable(double mu, double sigma2, std::uint64_t seed) {
    CounterRng rng(seed);
    LimitSample s;
    s.regime = Regularity::Decomposable;
    s.seed = seed;
    s.value1 = limit_rho_decomposable_stddev(mu, sigma2) * rng.normal();
    return s;
}

LimitSample limit_ab_decomposable(double mu, double sigma2, std::uint64_t seed) {
    CounterRng rng(seed);
    LimitSample s;
    s.regime = Regularity::Decomposable;
    s.seed = seed;
    const double z = limit_ab_decomposable_scale(mu, sigma2) * rng.normal();
    s.value1 = -z;
    s.value2 = z;
    return s;
}

LimitSample limit_rho_indecomposable(double mu, double sigma2, std::uint64_t seed) {
    CounterRng rng(seed);
    LimitSample s;
    s.regime = Regularity::IndecomposableNotPositivelyRegular;
    s.seed = seed;
    s.value1 = limit_rho_indecomposable_stddev(mu, sigma2) * rng.normal();
    return s;
}

LimitSample dickey_fuller_sample(long long mesh, std::uint64_t seed) {
    const WienerPath w = sample_wiener(mesh, seed, 0);
    const double dt = 1.0 / static_cast<double>(mesh);
    double riemann = 0.0;
    for (long long j = 0; j < mesh; ++j) {
        const double x = w.values[static_cast<std::size_t>(j)];
        riemann += x * x * dt;
    }
    LimitSample s;
    s.regime = Regularity::IndecomposableNotPositivelyRegular;
    s.mesh = mesh;
    s.seed = seed;
    s.degenerate = riemann < kDegenerateDenominator;
    if (!s.degenerate) {
        const double w1 = w.values[static_cast<std::size_t>(mesh)];
        s.value1 = 0.5 * (w1 * w1 - 1.0) / riemann;
    }
    return s;
}

std::pair<double, double> riemann_functional(
    std::span<const double> step_values,
    const std::function<double(double, double, double)>& kernel,
    const std::function<double(double)>& terminal) {
    const std::size_t n = step_values.size() - 1;
    if (step_values.size() < 2) throw std::invalid_argument("need at least two step values");
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n);
        acc += kernel(t, step_values[k], step_values[k - 1]);
    }
    return {terminal(step_values[n]), acc / static_cast<double>(n)};
}

void write_limit_samples_csv(std::ostream& os, std::span<const LimitSample> samples) {
    os << "index,case,value1,value2,mesh,seed\n";
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const LimitSample& s = samples[i];
        os << i << ',' << to_string(s.regime) << ',' << s.value1 << ',' << s.value2 << ','
           << s.mesh << ',' << s.seed << '\n';
    }
}

}  // namespace inar
