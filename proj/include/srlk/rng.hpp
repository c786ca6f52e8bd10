#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace srlk {

// Stateless 64-bit mixer (splitmix64 finalizer). Used to derive independent
// substream seeds from a master seed, e.g. mix_seed(mix_seed(master, m), trial).
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL + b;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic RNG: mt19937_64 engine (fully specified by the standard) with
// hand-rolled distribution transforms, so streams are reproducible across
// standard library implementations.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] via rejection sampling (unbiased).
    int64_t uniform_int(int64_t lo, int64_t hi) {
        if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<int64_t>(eng_());  // full 64-bit range
        uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t r;
        do {
            r = eng_();
        } while (r >= limit);
        return lo + static_cast<int64_t>(r % span);
    }

    // Standard normal via Box-Muller; the second value of each pair is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        u2 = uniform();
        double mag = std::sqrt(-2.0 * std::log(u1));
        double two_pi = 6.283185307179586476925286766559;
        spare_ = mag * std::sin(two_pi * u2);
        has_spare_ = true;
        return mag * std::cos(two_pi * u2);
    }

    // First m entries of a seeded partial Fisher-Yates over 0..n-1, sorted.
    std::vector<int> sample_without_replacement(int n, int m) {
        if (m < 0 || m > n) throw std::invalid_argument("sample size out of range");
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        for (int i = 0; i < m; ++i) {
            int j = static_cast<int>(uniform_int(i, n - 1));
            std::swap(ids[i], ids[j]);
        }
        ids.resize(m);
        std::sort(ids.begin(), ids.end());
        return ids;
    }

  private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace srlk
