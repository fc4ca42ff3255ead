#include "inar/model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace inar {

AutoregressiveParams::AutoregressiveParams(double alpha, double beta)
    : alpha_(alpha), beta_(beta) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("alpha must lie in [0,1]");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw std::invalid_argument("beta must lie in [0,1]");
}

ModelClass classify(const AutoregressiveParams& params) noexcept {
    const double rho = params.rho();
    ModelClass c;
    c.stability = rho < 1.0 ? Stability::Stable
                            : (rho == 1.0 ? Stability::Unstable : Stability::Explosive);
    if (params.beta() == 0.0)
        c.regularity = Regularity::Decomposable;
    else if (params.alpha() == 0.0)
        c.regularity = Regularity::IndecomposableNotPositivelyRegular;
    else
        c.regularity = Regularity::PositivelyRegular;
    return c;
}

std::string to_string(Stability s) {
    switch (s) {
        case Stability::Stable: return "stable";
        case Stability::Unstable: return "unstable";
        default: return "explosive";
    }
}

std::string to_string(Regularity r) {
    switch (r) {
        case Regularity::PositivelyRegular: return "positively_regular";
        case Regularity::Decomposable: return "decomposable";
        default: return "indecomposable_not_positively_regular";
    }
}

namespace {

// Accumulate E(eps^j), j = 0..8, by summing pmf(k) k^j until the order-8
// term is negligible relative to the running sum.
std::array<double, 9> moments_by_summation(double pmf0, auto next_pmf_ratio) {
    std::array<double, 9> raw{};
    double pmf = pmf0;
    for (long long k = 0; k < 1000000; ++k) {
        double kj = 1.0;
        for (int j = 0; j <= 8; ++j) {
            raw[j] += pmf * kj;
            kj *= static_cast<double>(k);
        }
        const double term8 = pmf * std::pow(static_cast<double>(k), 8.0);
        if (k > 4 && term8 < 1e-15 * (raw[8] + 1e-300) && pmf < 1e-13) break;
        pmf *= next_pmf_ratio(k);
    }
    return raw;
}

}  // namespace

InnovationModel InnovationModel::poisson(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("poisson rate must be positive");
    InnovationModel m;
    m.kind_ = InnovationKind::Poisson;
    m.lambda_ = lambda;
    m.raw_ = moments_by_summation(std::exp(-lambda), [lambda](long long k) {
        return lambda / static_cast<double>(k + 1);
    });
    return m;
}

InnovationModel InnovationModel::geometric(double p) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("geometric p must lie in (0,1]");
    if (p == 1.0) return categorical({1.0});
    InnovationModel m;
    m.kind_ = InnovationKind::Geometric;
    m.p_ = p;
    m.raw_ = moments_by_summation(p, [p](long long) { return 1.0 - p; });
    return m;
}

InnovationModel InnovationModel::categorical(std::vector<double> probs) {
    if (probs.empty()) throw std::invalid_argument("categorical support must be nonempty");
    double total = 0.0;
    for (double q : probs) {
        if (!(q >= 0.0)) throw std::invalid_argument("categorical probabilities must be nonnegative");
        total += q;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("categorical probabilities must sum to 1");
    InnovationModel m;
    m.kind_ = InnovationKind::Categorical;
    m.probs_ = std::move(probs);
    for (std::size_t v = 0; v < m.probs_.size(); ++v) {
        double kj = 1.0;
        for (int j = 0; j <= 8; ++j) {
            m.raw_[j] += m.probs_[v] * kj;
            kj *= static_cast<double>(v);
        }
    }
    return m;
}

double InnovationModel::raw_moment(int j) const {
    if (j < 0 || j > 8) throw std::invalid_argument("raw moments available for j = 0..8 only");
    return raw_[static_cast<std::size_t>(j)];
}

double InnovationModel::centered_third() const noexcept {
    const double mu = raw_[1];
    return raw_[3] - 3.0 * mu * raw_[2] + 2.0 * mu * mu * mu;
}

double InnovationModel::centered_moment(int j) const {
    if (j < 0 || j > 6) throw std::invalid_argument("centered moments available for j = 0..6 only");
    const double mu = raw_[1];
    double acc = 0.0;
    double binom = 1.0;
    double mu_pow = 1.0;
    for (int i = 0; i <= j; ++i) {
        // sum_i C(j,i) E(eps^{j-i}) (-mu)^i
        acc += binom * raw_[static_cast<std::size_t>(j - i)] * mu_pow;
        binom = binom * static_cast<double>(j - i) / static_cast<double>(i + 1);
        mu_pow *= -mu;
    }
    return acc;
}

long long InnovationModel::sample(CounterRng& rng) const noexcept {
    switch (kind_) {
        case InnovationKind::Poisson:
            return rng.poisson(lambda_);
        case InnovationKind::Geometric:
            return rng.geometric(p_);
        case InnovationKind::Categorical: {
            double u = rng.uniform();
            for (std::size_t v = 0; v + 1 < probs_.size(); ++v) {
                if (u < probs_[v]) return static_cast<long long>(v);
                u -= probs_[v];
            }
            return static_cast<long long>(probs_.size() - 1);
        }
    }
    return 0;
}

std::string InnovationModel::spec_string() const {
    std::ostringstream os;
    switch (kind_) {
        case InnovationKind::Poisson:
            os << "poisson:" << lambda_;
            break;
        case InnovationKind::Geometric:
            os << "geometric:" << p_;
            break;
        case InnovationKind::Categorical:
            os << "categorical:";
            for (std::size_t v = 0; v < probs_.size(); ++v)
                os << (v ? "," : "") << probs_[v];
            break;
    }
    return os.str();
}

InnovationModel parse_innovation(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("innovation spec must look like kind:param1[,param2,...]");
    const std::string kind = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    std::vector<double> values;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        values.push_back(std::stod(tok));
    }
    if (values.empty()) throw std::invalid_argument("innovation spec has no parameters");
    if (kind == "poisson") return InnovationModel::poisson(values[0]);
    if (kind == "geometric") return InnovationModel::geometric(values[0]);
    if (kind == "categorical") return InnovationModel::categorical(values);
    throw std::invalid_argument("unknown innovation kind: " + kind);
}

}  // namespace inar
