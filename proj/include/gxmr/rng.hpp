#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace gxmr {

// splitmix64 finalizer; used to spread seeds and derive substream ids.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Folds substream coordinates (setting index, grid indices, replicate, ...)
// into one replicate id. Adding grid points never perturbs other cells.
inline std::uint64_t substream_id(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    for (std::uint64_t p : parts) h = mix64(h ^ p);
    return h;
}

// ---------------------------------------------------------------------------
// RngStream — a deterministic random stream keyed by (master_seed,
// replicate_index). Distinct indices give statistically independent streams;
// identical keys reproduce identical draws bit for bit (the engine and all
// transforms below are fully specified, no std::*_distribution involved).
// ---------------------------------------------------------------------------
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t replicate_index)
        : master_seed_(master_seed),
          replicate_index_(replicate_index),
          engine_(mix64(mix64(master_seed) ^ replicate_index)) {}

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t replicate_index() const { return replicate_index_; }

    // Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal via Box-Muller, one cached mate per pair.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double r = std::sqrt(-2.0 * std::log1p(-uniform()));
        const double t = 6.283185307179586476925286766559 * uniform();
        cached_ = r * std::sin(t);
        have_cached_ = true;
        return r * std::cos(t);
    }

    bool bernoulli(double p) { return uniform() < p; }

    // Bin(2, p): copies of a bi-allelic SNP.
    int binomial2(double p) {
        return static_cast<int>(bernoulli(p)) + static_cast<int>(bernoulli(p));
    }

private:
    std::uint64_t master_seed_;
    std::uint64_t replicate_index_;
    std::mt19937_64 engine_;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace gxmr
