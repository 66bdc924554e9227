#include "necklaces/verifier.hpp"

#include "necklaces/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

namespace necklaces {

namespace {

constexpr std::uint64_t max_scan_words = std::uint64_t{1} << 26;

void validate_input(const Word& s, int b, int k, long n) {
    if (b < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    if (k < 1 || n < 1)
        throw std::invalid_argument("is_kn_perfect wants k >= 1 and n >= 1");
    if (s.empty())
        throw std::invalid_argument("empty word has no rotation class");
    for (Symbol c : s)
        if (c < 0 || c >= b)
            throw std::invalid_argument("symbol outside the alphabet");
}

// Occurrence scan for one word of A^k. Returns the failure, if any.
std::optional<PerfectionFailure> scan_word(const Word& s, int b, int k, long n,
                                           std::uint64_t widx) {
    const Word w = index_to_word(widx, k, b);
    std::vector<long> positions;
    for (long i = 0; i < static_cast<long>(s.size()); ++i)
        if (cyclic_match_at(s, w, i))
            positions.push_back(i);

    if (static_cast<long>(positions.size()) != n)
        return PerfectionFailure{w, positions, FailureReason::WrongCount, std::nullopt};

    std::vector<long> first_at(n, -1);
    for (long p : positions) {
        const long r = p % n;
        if (first_at[r] >= 0)
            return PerfectionFailure{w, positions, FailureReason::RepeatedResidue,
                                     std::make_pair(first_at[r], p)};
        first_at[r] = p;
    }
    return std::nullopt;
}

PerfectionReport run_verifier(const Word& s, int b, int k, long n, int threads) {
    validate_input(s, b, k, n);
    const std::uint64_t words = checked_pow(b, k, max_scan_words);

    PerfectionReport rep;
    rep.b = b;
    rep.k = k;
    rep.n = n;
    rep.actual_length = static_cast<long>(s.size());
    const unsigned __int128 expected = static_cast<unsigned __int128>(n) * words;
    rep.expected_length =
        expected <= (std::uint64_t{1} << 62) ? static_cast<long>(expected) : -1;
    rep.length_ok = static_cast<unsigned __int128>(rep.actual_length) == expected;

    if (static_cast<long>(s.size()) < k) {
        // Too short to even hold one window per the length equation; the
        // length verdict already settles it.
        rep.is_perfect = false;
        return rep;
    }

    std::vector<std::optional<PerfectionFailure>> slots(words);
    if (threads == 1) {
        for (std::uint64_t widx = 0; widx < words; ++widx)
            slots[widx] = scan_word(s, b, k, n, widx);
    } else {
#ifdef _OPENMP
        const int t = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for num_threads(t) schedule(dynamic, 64)
        for (long long widx = 0; widx < static_cast<long long>(words); ++widx)
            slots[widx] = scan_word(s, b, k, n, static_cast<std::uint64_t>(widx));
#else
        for (std::uint64_t widx = 0; widx < words; ++widx)
            slots[widx] = scan_word(s, b, k, n, widx);
#endif
    }
    for (auto& slot : slots)
        if (slot)
            rep.failures.push_back(std::move(*slot));

    rep.is_perfect = rep.length_ok && rep.failures.empty();
    return rep;
}

} // namespace

PerfectionReport is_kn_perfect(const Word& s, int b, int k, long n) {
    return run_verifier(s, b, k, n, 1);
}

PerfectionReport is_kn_perfect_parallel(const Word& s, int b, int k, long n, int threads) {
    return run_verifier(s, b, k, n, threads);
}

PerfectionReport is_perfect(const Word& s, int b, int k) {
    return is_kn_perfect(s, b, k, k);
}

bool check_cycle_condition(const std::vector<std::uint64_t>& sigma, int k, int b) {
    if (b < 2 || k < 1)
        throw std::invalid_argument("check_cycle_condition wants b >= 2 and k >= 1");
    const std::uint64_t N = checked_pow(b, k, max_scan_words);
    if (sigma.size() != N)
        throw std::invalid_argument("not a cycle: wrong domain size");

    std::vector<bool> image(N, false);
    for (std::uint64_t v : sigma) {
        if (v >= N || image[v])
            throw std::invalid_argument("not a cycle: not a permutation");
        image[v] = true;
    }
    std::uint64_t at = 0, steps = 0;
    do {
        at = sigma[at];
        ++steps;
    } while (at != 0 && steps <= N);
    if (steps != N)
        throw std::invalid_argument("not a cycle: orbit of 0 has length " +
                                    std::to_string(steps));

    // For each split length l: key the (suffix of w, prefix of sigma(w))
    // pair; perfection of the orbit word is exactly "every pair hit once".
    std::vector<std::uint32_t> seen(N);
    std::uint64_t suffix_mod = 1;   // b^l
    for (int l = 0; l < k; ++l, suffix_mod *= b) {
        std::fill(seen.begin(), seen.end(), 0);
        const std::uint64_t prefix_div = suffix_mod;      // drop last l digits
        const std::uint64_t prefix_count = N / suffix_mod;
        for (std::uint64_t m = 0; m < N; ++m) {
            const std::uint64_t key = (m % suffix_mod) * prefix_count + sigma[m] / prefix_div;
            if (seen[key]++)
                return false;
        }
    }
    return true;
}

nlohmann::json PerfectionReport::to_json() const {
    nlohmann::json j;
    j["b"] = b;
    j["k"] = k;
    j["n"] = n;
    j["is_perfect"] = is_perfect;
    j["length_ok"] = length_ok;
    j["expected_length"] = expected_length;
    j["actual_length"] = actual_length;
    nlohmann::json fl = nlohmann::json::array();
    for (const auto& f : failures) {
        nlohmann::json e;
        e["word"] = format_word(f.word, b);
        e["positions"] = f.positions;
        e["reason"] = f.reason == FailureReason::WrongCount ? "wrong-count" : "repeated-residue";
        if (f.collision)
            e["collision"] = {f.collision->first, f.collision->second};
        fl.push_back(std::move(e));
    }
    j["failures"] = std::move(fl);
    return j;
}

} // namespace necklaces
