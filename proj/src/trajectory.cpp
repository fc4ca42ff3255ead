#include "inar/trajectory.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace inar {

Trajectory simulate(const AutoregressiveParams& params, const InnovationModel& innovation,
                    long long n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("trajectory length n must be >= 1");
    Trajectory traj;
    traj.params = params;
    traj.seed = seed;
    traj.values.resize(static_cast<std::size_t>(n) + 2, 0);
    CounterRng rng(seed);
    const double alpha = params.alpha();
    const double beta = params.beta();
    for (long long k = 1; k <= n; ++k) {
        const long long thin1 = rng.binomial(traj.x(k - 1), alpha);
        const long long thin2 = rng.binomial(traj.x(k - 2), beta);
        const long long eps = innovation.sample(rng);
        traj.values[static_cast<std::size_t>(k + 1)] = thin1 + thin2 + eps;
    }
    return traj;
}

DerivedSequences derived_sequences(const Trajectory& traj, double mu_eps) {
    const long long n = traj.n();
    const double alpha = traj.params.alpha();
    const double beta = traj.params.beta();
    DerivedSequences d;
    d.U.resize(static_cast<std::size_t>(n) + 1, 0.0);
    d.V.resize(static_cast<std::size_t>(n) + 1, 0.0);
    d.M.resize(static_cast<std::size_t>(n), 0.0);
    for (long long k = 1; k <= n; ++k) {
        const double xk = static_cast<double>(traj.x(k));
        const double xk1 = static_cast<double>(traj.x(k - 1));
        const double xk2 = static_cast<double>(traj.x(k - 2));
        d.U[static_cast<std::size_t>(k)] = xk + beta * xk1;
        d.V[static_cast<std::size_t>(k)] = xk - xk1;
        d.M[static_cast<std::size_t>(k - 1)] = xk - alpha * xk1 - beta * xk2 - mu_eps;
    }
    return d;
}

std::array<std::array<double, 2>, 2> putzer_power(double beta, long long k) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw std::invalid_argument("beta must lie in [0,1]");
    if (k < 0) throw std::invalid_argument("matrix power requires k >= 0");
    const double s = 1.0 + beta;
    const double lam = (k == 0) ? 1.0 : std::pow(-beta, static_cast<double>(k));
    // u u~^T = [[1, beta], [1, beta]]/(1+beta); v v~^T = [[beta, -beta], [-1, 1]]/(1+beta)
    return {{{(1.0 + lam * beta) / s, beta * (1.0 - lam) / s},
             {(1.0 - lam) / s, (beta + lam) / s}}};
}

double expected_value_exact(double beta, double mu, long long n) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    const double s = 1.0 + beta;
    const double lam = (n == 0) ? 1.0 : std::pow(-beta, static_cast<double>(n));
    return mu * static_cast<double>(n) / s + mu * beta * (1.0 - lam) / (s * s);
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "k,x\n";
    for (long long k = -1; k <= traj.n(); ++k) os << k << ',' << traj.x(k) << '\n';
}

std::vector<long long> read_trajectory_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("k,x", 0) != 0)
        throw std::invalid_argument("trajectory CSV must start with header 'k,x'");
    std::vector<long long> values;
    long long expected_k = -1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("malformed trajectory CSV row: " + line);
        const long long k = std::stoll(line.substr(0, comma));
        const long long x = std::stoll(line.substr(comma + 1));
        if (k != expected_k)
            throw std::invalid_argument("trajectory CSV rows must be consecutive from k = -1");
        if (x < 0) throw std::invalid_argument("trajectory values must be nonnegative");
        values.push_back(x);
        ++expected_k;
    }
    if (values.size() < 3 || values[0] != 0 || values[1] != 0)
        throw std::invalid_argument("trajectory must start with X_{-1} = X_0 = 0");
    return values;
}

}  // namespace inar
