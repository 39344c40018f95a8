#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace qcert {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}
}  // namespace detail

// Named substream identifiers: one stream per (class, purpose).
enum class StreamPurpose : std::uint64_t {
    Arrivals = 0,
    Services = 1,
    Sampling = 2,
};

// Derives an independent substream seed from the scenario seed and a
// (stream id, purpose) pair. Stable across platforms.
inline std::uint64_t derive_stream_seed(std::uint64_t scenario_seed, std::uint64_t stream_id,
                                        StreamPurpose purpose) {
    std::uint64_t x = detail::splitmix64(scenario_seed);
    x = detail::splitmix64(x ^ (0x9E3779B97F4A7C15ull * (stream_id + 1)));
    x = detail::splitmix64(x ^ (0xC2B2AE3D27D4EB4Full * (static_cast<std::uint64_t>(purpose) + 1)));
    return x;
}

// Deterministic stream of variates. Uniform mapping is explicit (not the
// implementation-defined std::distributions) so traces are reproducible
// byte-for-byte across standard libraries.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // [0, 1)
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double unit_exponential() { return -std::log1p(-uniform01()); }

    double exponential(double rate) { return unit_exponential() / rate; }

    // Index drawn according to `probs` (assumed to sum to 1).
    std::size_t categorical(std::span<const double> probs) {
        const double u = uniform01();
        double cum = 0.0;
        for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
            cum += probs[i];
            if (u < cum) return i;
        }
        return probs.empty() ? 0 : probs.size() - 1;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace qcert
