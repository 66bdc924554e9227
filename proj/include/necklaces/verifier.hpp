#pragma once

#include "necklaces/words.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace necklaces {

// A necklace of length n*b^k is (k,n)-perfect when every word of length k
// occurs exactly n times, at positions pairwise distinct mod n. Rotating the
// representative shifts all positions by a common constant (and |s| is a
// multiple of n), which preserves distinctness mod n, so checking one
// representative settles the whole rotation class.

enum class FailureReason { WrongCount, RepeatedResidue };

struct PerfectionFailure {
    Word word;
    std::vector<long> positions;                      // all cyclic occurrences
    FailureReason reason;
    std::optional<std::pair<long, long>> collision;   // two positions equal mod n
};

struct PerfectionReport {
    int b = 0;
    int k = 0;
    long n = 0;
    bool is_perfect = false;
    bool length_ok = false;
    long expected_length = 0;
    long actual_length = 0;
    std::vector<PerfectionFailure> failures;          // sorted by word index

    nlohmann::json to_json() const;
};

/// Decide (k,n)-perfection of [s] by the naive cyclic occurrence scan,
/// O(|s| * b^k * k). This scan is the reference the rest of the project is
/// checked against. Errors on empty s or symbols outside the alphabet.
PerfectionReport is_kn_perfect(const Word& s, int b, int k, long n);

/// Same verdict as is_kn_perfect, with the per-word scans spread over
/// OpenMP threads (0 = all cores). Report assembly stays deterministic.
PerfectionReport is_kn_perfect_parallel(const Word& s, int b, int k, long n,
                                        int threads = 0);

/// (k,k)-perfection.
PerfectionReport is_perfect(const Word& s, int b, int k);

/// For a cycle sigma on the words of length k (given by index, so
/// sigma[word_to_index(w)] = word_to_index(sigma(w))): true iff for every
/// split length l in [0,k), every suffix x of length l and prefix y of
/// length k-l, exactly one w has w ending in x and sigma(w) starting with y.
/// This holds exactly when the concatenation of any sigma-orbit is a
/// (k,k)-perfect necklace. Errors unless sigma is a single b^k-cycle.
bool check_cycle_condition(const std::vector<std::uint64_t>& sigma, int k, int b);

} // namespace necklaces
