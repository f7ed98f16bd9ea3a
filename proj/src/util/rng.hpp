#pragma once

// Deterministic randomness. One master seed per run; every stage derives its
// own stream from (seed, label) so reordering stages never shifts another
// stage's draws. Distribution helpers are hand rolled because the standard
// distributions are implementation defined and we want bit-identical output.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace rf {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(splitmix64(seed)) {}

    uint64_t next() { return gen_(); }

    // Unbiased integer in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        if (n <= 1) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % n;
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return uniform01() < p;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(below(v.size()))];
    }

    // k distinct values from [0, n), sorted ascending.
    std::vector<int> sample_sorted(int n, int k) {
        std::vector<int> pool(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<size_t>(i)] = i;
        for (int i = 0; i < k; ++i) {
            size_t j = static_cast<size_t>(i) + static_cast<size_t>(below(static_cast<uint64_t>(n - i)));
            std::swap(pool[static_cast<size_t>(i)], pool[j]);
        }
        pool.resize(static_cast<size_t>(k));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

  private:
    std::mt19937_64 gen_;
};

// Stage streams: fixed labels, order independent.
inline Rng derive_stream(uint64_t master_seed, const std::string& label) {
    return Rng(splitmix64(master_seed ^ fnv1a64(label)));
}

}  // namespace rf
