#ifndef INAR_TRAJECTORY_HPP
#define INAR_TRAJECTORY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "inar/model.hpp"
#include "inar/rng.hpp"

namespace inar {

// Zero-start integer path X_{-1}, X_0, ..., X_n; values[k+1] holds X_k.
struct Trajectory {
    std::vector<long long> values;
    AutoregressiveParams params{0.0, 0.0};
    std::uint64_t seed = 0;

    long long x(long long k) const noexcept { return values[static_cast<std::size_t>(k + 1)]; }
    long long n() const noexcept { return static_cast<long long>(values.size()) - 2; }
};

// X_k = Bin(X_{k-1}, alpha) + Bin(X_{k-2}, beta) + eps_k with exact
// binomial thinning; bit-identical output for identical inputs.
Trajectory simulate(const AutoregressiveParams& params, const InnovationModel& innovation,
                    long long n, std::uint64_t seed);

// Decoupled AR(1) coordinates of the unstable process:
//   U_k = X_k + beta X_{k-1}   (unstable, drift mu_eps)
//   V_k = X_k - X_{k-1}        (stable)
//   M_k = X_k - alpha X_{k-1} - beta X_{k-2} - mu_eps  (martingale differences)
struct DerivedSequences {
    std::vector<double> U;  // U_0..U_n
    std::vector<double> V;  // V_0..V_n
    std::vector<double> M;  // M[k-1] = M_k for k = 1..n
};

DerivedSequences derived_sequences(const Trajectory& traj, double mu_eps);

// A^k for A = [[1-beta, beta], [1, 0]] via the spectral (Putzer) form
// A^k = u u~^T + (-beta)^k v v~^T.
std::array<std::array<double, 2>, 2> putzer_power(double beta, long long k);

// E(X_n) = mu n/(1+beta) + mu beta (1-(-beta)^n)/(1+beta)^2 for rho = 1.
double expected_value_exact(double beta, double mu, long long n);

// CSV with header "k,x" and rows for k = -1..n.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
std::vector<long long> read_trajectory_csv(std::istream& is);

}  // namespace inar

#endif
