#ifndef INAR_MODEL_HPP
#define INAR_MODEL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "inar/rng.hpp"

namespace inar {

// Autoregressive pair (alpha, beta); the stability parameter is
// rho = alpha + beta and rho == 1 is the unstable (unit-root) regime.
class AutoregressiveParams {
public:
    AutoregressiveParams(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    double rho() const noexcept { return alpha_ + beta_; }

private:
    double alpha_;
    double beta_;
};

enum class Stability { Stable, Unstable, Explosive };
enum class Regularity { PositivelyRegular, Decomposable, IndecomposableNotPositivelyRegular };

struct ModelClass {
    Stability stability;
    Regularity regularity;
};

ModelClass classify(const AutoregressiveParams& params) noexcept;

std::string to_string(Stability s);
std::string to_string(Regularity r);

enum class InnovationKind { Poisson, Geometric, Categorical };

// Nonnegative-integer innovation distribution with known mean, variance
// and raw moments up to order 8. Raw moments of Poisson/Geometric are
// obtained by pmf summation until the tail contribution is negligible;
// Categorical moments are exact finite sums.
class InnovationModel {
public:
    static InnovationModel poisson(double lambda);
    static InnovationModel geometric(double p);
    // probs[v] = P(eps = v) over support {0, 1, ..., probs.size()-1}.
    static InnovationModel categorical(std::vector<double> probs);

    InnovationKind kind() const noexcept { return kind_; }
    double mean() const noexcept { return raw_[1]; }
    double variance() const noexcept { return raw_[2] - raw_[1] * raw_[1]; }
    // E(eps^j), j = 0..8.
    double raw_moment(int j) const;
    // E(eps - mu)^3 from the raw moments.
    double centered_third() const noexcept;
    // E(eps - mu)^j for j = 0..6 (binomial expansion of the raw moments).
    double centered_moment(int j) const;

    long long sample(CounterRng& rng) const noexcept;

    std::string spec_string() const;  // e.g. "poisson:2"

private:
    InnovationModel() = default;

    InnovationKind kind_ = InnovationKind::Categorical;
    double lambda_ = 0.0;
    double p_ = 0.0;
    std::vector<double> probs_;
    std::array<double, 9> raw_{};  // raw_[j] = E(eps^j)
};

// Parse "poisson:2", "geometric:0.4" or "categorical:0.5,0.3,0.2".
InnovationModel parse_innovation(const std::string& spec);

}  // namespace inar

#endif
