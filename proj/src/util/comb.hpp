#pragma once

// Small combinatorics helpers shared across modules.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace rf {

// Binomial coefficient, saturating at cap to avoid overflow in size guards.
inline long long binomial(long long n, long long k, long long cap = (1LL << 62)) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        if (r > cap / (n - k + i)) return cap;
        r = r * (n - k + i) / i;
    }
    return r;
}

// Visit all k-subsets of {0,...,n-1} in lexicographic order.
// fn returns false to stop early; for_each_subset returns false on early stop.
inline bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return true;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        if (!fn(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

// Visit all k-subsets of the given (ascending) pool, emitting pool values.
template <class T>
bool for_each_subset_of(const std::vector<T>& pool, int k,
                        const std::function<bool(const std::vector<T>&)>& fn) {
    std::vector<T> out(static_cast<size_t>(std::max(k, 0)));
    return for_each_subset(static_cast<int>(pool.size()), k, [&](const std::vector<int>& idx) {
        for (int i = 0; i < k; ++i) out[static_cast<size_t>(i)] = pool[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        return fn(out);
    });
}

inline bool is_sorted_unique(const std::vector<int>& v) {
    for (size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

inline bool contains_sorted(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

inline bool subset_of_sorted(const std::vector<int>& sub, const std::vector<int>& sorted) {
    for (int x : sub)
        if (!std::binary_search(sorted.begin(), sorted.end(), x)) return false;
    return true;
}

inline bool sorted_intersects(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

// Parity of the permutation sorting v ascending (v has distinct entries).
// Returns +1 for even, -1 for odd.
inline int sort_parity(std::vector<int> v) {
    int sign = 1;
    for (size_t i = 0; i < v.size(); ++i) {
        for (size_t j = i + 1; j < v.size(); ++j) {
            if (v[j] < v[i]) {
                std::swap(v[i], v[j]);
                sign = -sign;
            }
        }
    }
    return sign;
}

}  // namespace rf
