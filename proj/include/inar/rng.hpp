#ifndef INAR_RNG_HPP
#define INAR_RNG_HPP

#include <cstdint>
#include <vector>

namespace inar {

// SplitMix64 finalizer, used both as the avalanche mixer for stream
// derivation and as the output function of the counter-based generator.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// Counter-based 64-bit generator: output_i = mix64(key + i * gamma).
// Streams are cheap to derive and never share state, so parallel Monte
// Carlo replications can each own stream (master_seed, index).
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    // Stream derivation: key = mix64(master_seed XOR stream_index).
    static CounterRng stream(std::uint64_t master_seed, std::uint64_t stream_index) noexcept {
        return CounterRng(mix64(master_seed ^ stream_index));
    }

    std::uint64_t next_u64() noexcept {
        counter_ += 0x9e3779b97f4a7c15ULL;
        return mix64(key_ + counter_);
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1]; safe under log().
    double uniform_pos() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller, second value cached.
    double normal() noexcept;

    // Exact samplers (inversion; mode-centered inversion for large counts).
    long long binomial(long long n, double p) noexcept;
    long long poisson(double lambda) noexcept;
    long long geometric(double p) noexcept;  // support {0,1,2,...}

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace inar

#endif
