#pragma once

// Test-side oracles, deliberately independent of the library code paths
// they cross-check.

#include "necklaces/words.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace testo {

using necklaces::Symbol;
using necklaces::Word;

inline Word W(const std::string& text, int b = 2) {
    return necklaces::parse_word(text, b);
}

// Least rotation by materializing all rotations and taking the minimum.
inline Word naive_min_rotation(const Word& w) {
    Word best = w;
    Word cur = w;
    for (std::size_t i = 1; i < w.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best)
            best = cur;
    }
    return best;
}

// Occurrence scan over the doubled word s.s truncated to |s| start points.
inline std::vector<long> doubled_scan(const Word& s, const Word& w) {
    Word ss = s;
    ss.insert(ss.end(), s.begin(), s.end());
    std::vector<long> hits;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (std::equal(w.begin(), w.end(), ss.begin() + i))
            hits.push_back(static_cast<long>(i));
    return hits;
}

// Smallest cyclic period by direct comparison against every candidate
// divisor, no shortcuts shared with the library.
inline long naive_period(const Word& w) {
    const long n = static_cast<long>(w.size());
    for (long L = 1; L < n; ++L) {
        if (n % L != 0)
            continue;
        bool same = true;
        for (long i = 0; i < n; ++i)
            same = same && w[i % n] == w[(i + L) % n];
        if (same)
            return L;
    }
    return n;
}

// Second, structurally different (k,k) checker: cut each of the k shifted
// decompositions into b^k consecutive blocks of length k and demand that
// every block value appears exactly once per decomposition.
inline bool decomposition_perfect(const Word& s, int b, int k) {
    const std::uint64_t bk = necklaces::checked_pow(b, k, std::uint64_t{1} << 32);
    if (s.size() != bk * static_cast<std::uint64_t>(k))
        return false;
    const long L = static_cast<long>(s.size());
    for (int offset = 0; offset < k; ++offset) {
        std::vector<bool> seen(bk, false);
        for (std::uint64_t t = 0; t < bk; ++t) {
            std::uint64_t idx = 0;
            for (int d = 0; d < k; ++d)
                idx = idx * b + s[(offset + static_cast<long>(t) * k + d) % L];
            if (seen[idx])
                return false;
            seen[idx] = true;
        }
    }
    return true;
}

inline Word random_word(std::mt19937& rng, int len, int b) {
    std::uniform_int_distribution<int> dist(0, b - 1);
    Word w(len);
    for (auto& c : w)
        c = dist(rng);
    return w;
}

// Uniformly random cyclic permutation of {0,...,n-1} (a single n-cycle).
inline std::vector<std::uint64_t> random_cycle(std::mt19937& rng, std::uint64_t n) {
    std::vector<std::uint64_t> order(n);
    for (std::uint64_t i = 0; i < n; ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint64_t> sigma(n);
    for (std::uint64_t i = 0; i < n; ++i)
        sigma[order[i]] = order[(i + 1) % n];
    return sigma;
}

} // namespace testo
