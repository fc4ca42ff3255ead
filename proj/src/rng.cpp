#include "inar/rng.hpp"

#include <cmath>

namespace inar {

double CounterRng::normal() noexcept {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    cached_normal_ = r * std::sin(theta);
    has_cached_normal_ = true;
    return r * std::cos(theta);
}

namespace {

// Plain CDF inversion from k = 0. Valid while (1-q)^n stays normal.
long long binomial_inv_small(CounterRng& rng, long long n, double q) noexcept {
    double u = rng.uniform();
    double f = std::exp(static_cast<double>(n) * std::log1p(-q));
    const double r = q / (1.0 - q);
    long long k = 0;
    while (k < n && u > f) {
        u -= f;
        f *= r * static_cast<double>(n - k) / static_cast<double>(k + 1);
        ++k;
    }
    return k;
}

// Inversion enumerated outward from the mode; O(sqrt(n q (1-q)))
// expected iterations and no underflow for large n.
long long binomial_inv_mode(CounterRng& rng, long long n, double q) noexcept {
    long long m = static_cast<long long>(std::floor(static_cast<double>(n + 1) * q));
    if (m > n) m = n;
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    const double log_pm = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                          std::lgamma(nd - md + 1.0) + md * std::log(q) +
                          (nd - md) * std::log1p(-q);
    const double pm = std::exp(log_pm);
    const double rr = q / (1.0 - q);
    double u = rng.uniform() - pm;
    if (u <= 0.0) return m;
    double fr = pm, fl = pm;
    long long kr = m, kl = m;
    while (kr < n || kl > 0) {
        if (kr < n) {
            fr *= rr * static_cast<double>(n - kr) / static_cast<double>(kr + 1);
            ++kr;
            u -= fr;
            if (u <= 0.0) return kr;
        }
        if (kl > 0) {
            fl *= static_cast<double>(kl) / (rr * static_cast<double>(n - kl + 1));
            --kl;
            u -= fl;
            if (u <= 0.0) return kl;
        }
    }
    return m;
}

long long poisson_inv_small(CounterRng& rng, double lambda) noexcept {
    double u = rng.uniform();
    double f = std::exp(-lambda);
    long long k = 0;
    while (u > f) {
        u -= f;
        ++k;
        f *= lambda / static_cast<double>(k);
        if (k > 1000000) break;  // unreachable at small lambda
    }
    return k;
}

long long poisson_inv_mode(CounterRng& rng, double lambda) noexcept {
    const long long m = static_cast<long long>(std::floor(lambda));
    const double md = static_cast<double>(m);
    const double pm = std::exp(md * std::log(lambda) - lambda - std::lgamma(md + 1.0));
    double u = rng.uniform() - pm;
    if (u <= 0.0) return m;
    double fr = pm, fl = pm;
    long long kr = m, kl = m;
    const long long guard = m + 64 * static_cast<long long>(std::sqrt(lambda) + 1.0) + 64;
    while (kr < guard || kl > 0) {
        if (kr < guard) {
            fr *= lambda / static_cast<double>(kr + 1);
            ++kr;
            u -= fr;
            if (u <= 0.0) return kr;
        }
        if (kl > 0) {
            fl *= static_cast<double>(kl) / lambda;
            --kl;
            u -= fl;
            if (u <= 0.0) return kl;
        }
    }
    return m;
}

}  // namespace

long long CounterRng::binomial(long long n, double p) noexcept {
    if (n <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;
    const bool flipped = p > 0.5;
    const double q = flipped ? 1.0 - p : p;
    long long k;
    if (static_cast<double>(n) * q < 16.0)
        k = binomial_inv_small(*this, n, q);
    else
        k = binomial_inv_mode(*this, n, q);
    return flipped ? n - k : k;
}

long long CounterRng::poisson(double lambda) noexcept {
    if (lambda <= 0.0) return 0;
    if (lambda < 16.0) return poisson_inv_small(*this, lambda);
    return poisson_inv_mode(*this, lambda);
}

long long CounterRng::geometric(double p) noexcept {
    if (p >= 1.0) return 0;
    const double u = uniform_pos();
    return static_cast<long long>(std::floor(std::log(u) / std::log1p(-p)));
}

}  // namespace inar
