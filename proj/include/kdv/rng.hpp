#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace kdv {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from (seed, stream index). Streams can
/// be derived again from the result, so per-path and per-component substreams
/// compose: derive_stream(derive_stream(seed, path), component).
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
    splitmix64(s);
    return splitmix64(s);
}

/// xoshiro256++ with splitmix64 state expansion. Small, fast, and fully
/// deterministic across platforms, which the reproducibility contract needs;
/// the standard-library engines leave normal generation implementation-defined.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on (0, 1]; never 0, so it is safe under log.
    double uniform() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

    /// Uniform on (-1, 1).
    double uniform_symmetric() { return 2.0 * uniform() - 1.0; }

private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
    std::array<std::uint64_t, 4> state_;
};

/// Standard normal stream via the polar method, one value cached per pair.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed, std::uint64_t stream = 0)
        : rng_(derive_stream(seed, stream)) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = rng_.uniform_symmetric();
            v = rng_.uniform_symmetric();
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double scale = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * scale;
        have_spare_ = true;
        return u * scale;
    }

private:
    Xoshiro256pp rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace kdv
