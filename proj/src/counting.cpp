#include "necklaces/counting.hpp"

#include "necklaces/astute_graph.hpp"
#include "necklaces/errors.hpp"
#include "necklaces/verifier.hpp"
#include "necklaces/words.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <map>

namespace necklaces {

std::string to_string(CountMethod m) {
    switch (m) {
    case CountMethod::Formula: return "formula";
    case CountMethod::BruteForce: return "brute-force";
    case CountMethod::CircuitEnumeration: return "circuit-enumeration";
    }
    return "?";
}

nlohmann::json CountReport::to_json() const {
    nlohmann::json j;
    j["b"] = b;
    j["k"] = k;
    j["n"] = n;
    j["method"] = to_string(method);
    j["total"] = total.get_str();
    j["irreducible"] = irreducible.get_str();
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& line : per_divisor) {
        nlohmann::json e;
        e["j"] = line.j;
        e["euler_circuits"] = line.euler_circuits.get_str();
        e["phi"] = line.phi;
        e["irreducible"] = line.irreducible.get_str();
        lines.push_back(std::move(e));
    }
    j["per_divisor"] = std::move(lines);
    return j;
}

namespace {

// Keeps e(j) results to a sane size; (b!)^exponent grows fast.
constexpr unsigned long max_formula_exponent = 1ul << 22;

void validate_bkn(int b, int k, long n) {
    if (b < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    if (k < 1 || n < 1)
        throw std::invalid_argument("counting wants k >= 1 and n >= 1");
}

} // namespace

BigCount euler_count_formula(int b, int k, long j) {
    validate_bkn(b, k, j);
    const std::uint64_t bk1 = checked_pow(b, k - 1, std::uint64_t{1} << 40);
    if (static_cast<std::uint64_t>(j) > max_formula_exponent / bk1)
        throw BudgetError("e(j) would be astronomically large; refusing to materialize it");
    const unsigned long exp = static_cast<unsigned long>(j) * static_cast<unsigned long>(bk1);

    const BigCount numerator = big_pow(big_factorial(b), exp);
    const BigCount denom = big_pow(BigCount(b), static_cast<unsigned long>(k));
    if (!mpz_divisible_p(numerator.get_mpz_t(), denom.get_mpz_t()))
        throw std::logic_error("e(j) division by b^k is not exact; counting bug");
    BigCount out;
    mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), denom.get_mpz_t());
    return out;
}

namespace {

// p(j) by Moebius inversion of e(j) = sum over d_{b,j} | l | j of l * p(l),
// written with j = m * d: p(md) = (1/md) * sum over i | m of mu(m/i) e(id).
BigCount irreducible_count_raw(int b, int k, long j) {
    const long d = d_factor(b, j);
    if (j % d != 0)
        return 0;   // no such necklace can have this period
    const long m = j / d;
    BigCount sum = 0;
    for (long i : divisors(m))
        sum += BigCount(moebius(m / i)) * euler_count_formula(b, k, i * d);
    if (sum < 0 || !mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(j)))
        throw std::logic_error("p(j) inversion did not divide exactly; counting bug");
    BigCount out;
    mpz_divexact_ui(out.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(j));
    return out;
}

} // namespace

BigCount irreducible_count(int b, int k, long j) {
    validate_bkn(b, k, j);
    const BigCount p = irreducible_count_raw(b, k, j);
    // Re-derive e(j) from the p(l) and insist the triangle closes.
    const long d = d_factor(b, j);
    BigCount back = 0;
    for (long l : divisors(j))
        if (l % d == 0)
            back += BigCount(l) * irreducible_count_raw(b, k, l);
    if (back != euler_count_formula(b, k, j))
        throw std::logic_error("e(j) != sum of l*p(l); counting bug");
    return p;
}

CountReport perfect_count(int b, int k, long n) {
    validate_bkn(b, k, n);
    CountReport rep;
    rep.b = b;
    rep.k = k;
    rep.n = n;
    rep.method = CountMethod::Formula;

    const long d = d_factor(b, n);
    BigCount sum = 0;
    BigCount ptotal = 0;
    for (long j : divisors(n)) {
        if (j % d != 0)
            continue;
        DivisorLine line;
        line.j = j;
        line.euler_circuits = euler_count_formula(b, k, j);
        line.phi = euler_phi(n / j);
        line.irreducible = irreducible_count(b, k, j);
        sum += line.euler_circuits * line.phi;
        ptotal += line.irreducible;
        rep.per_divisor.push_back(std::move(line));
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(n)))
        throw std::logic_error("necklace count not divisible by n; counting bug");
    mpz_divexact_ui(rep.total.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n));
    // The same count must fall out as the plain sum of the p(j).
    if (rep.total != ptotal)
        throw std::logic_error("divisor sum disagrees with sum of p(j); counting bug");
    rep.irreducible = rep.per_divisor.back().irreducible;
    return rep;
}

namespace {

// True iff no rotation of w is lexicographically smaller, i.e. w is the
// stored representative of its necklace.
bool is_least_rotation(const std::vector<Symbol>& w) {
    const long L = static_cast<long>(w.size());
    for (long rot = 1; rot < L; ++rot) {
        long idx = rot;
        for (long t = 0; t < L; ++t) {
            const Symbol a = w[idx];
            const Symbol c = w[t];
            if (a != c) {
                if (a < c)
                    return false;
                break;
            }
            if (++idx == L)
                idx = 0;
        }
    }
    return true;
}

// Single cyclic pass with a rolling window index. With |w| = n*b^k, the
// counts sum to n*b^k over b^k windows, so "no residue repeats" already
// forces every count to be exactly n. Residue sets are uint64 masks; any
// in-budget length keeps n < 64.
bool kn_perfect_fast(const std::vector<Symbol>& w, int b, int k, long n, long bk1,
                     std::vector<std::uint64_t>& residue_seen) {
    const long L = static_cast<long>(w.size());
    std::fill(residue_seen.begin(), residue_seen.end(), 0);
    long idx = 0;
    for (int t = 0; t < k; ++t)
        idx = idx * b + w[t];
    long r = 0;
    for (long i = 0; i < L; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << r;
        if (residue_seen[idx] & bit)
            return false;
        residue_seen[idx] |= bit;
        idx = (idx - w[i] * bk1) * b + w[(i + k) % L];
        if (++r == n)
            r = 0;
    }
    return true;
}

struct BruteTally {
    unsigned long long total = 0;
    std::map<long, unsigned long long> by_period_j;

    void merge(const BruteTally& o) {
        total += o.total;
        for (auto [j, c] : o.by_period_j)
            by_period_j[j] += c;
    }
};

// Count perfect necklaces among candidates lo..hi-1 (words as base-b
// integers). Pure function of its range, so shards merge by addition.
BruteTally brute_force_range(int b, int k, long n, long L, std::uint64_t lo,
                             std::uint64_t hi) {
    BruteTally tally;
    const long bk = static_cast<long>(checked_pow(b, k, std::uint64_t{1} << 40));
    const long bk1 = bk / b;
    std::vector<Symbol> w(index_to_word(lo, static_cast<int>(L), b));
    std::vector<std::uint64_t> residue_seen(bk);

    for (std::uint64_t m = lo; m < hi; ++m) {
        if (is_least_rotation(w) && kn_perfect_fast(w, b, k, n, bk1, residue_seen)) {
            ++tally.total;
            const long p = period(w);
            if (p % bk != 0)
                throw std::logic_error("perfect necklace period is not a multiple of b^k");
            ++tally.by_period_j[p / bk];
        }
        // odometer step
        for (long pos = L - 1; pos >= 0; --pos) {
            if (++w[pos] < b)
                break;
            w[pos] = 0;
        }
    }
    return tally;
}

CountReport report_from_tally(int b, int k, long n, const BruteTally& tally) {
    CountReport rep;
    rep.b = b;
    rep.k = k;
    rep.n = n;
    rep.method = CountMethod::BruteForce;
    rep.total = BigCount(static_cast<unsigned long>(tally.total));
    for (auto [j, c] : tally.by_period_j) {
        DivisorLine line;
        line.j = j;
        line.irreducible = BigCount(static_cast<unsigned long>(c));
        if (j == n)
            rep.irreducible = line.irreducible;
        rep.per_divisor.push_back(std::move(line));
    }
    return rep;
}

std::uint64_t brute_candidates(int b, int k, long n, std::uint64_t budget, long& L_out) {
    validate_bkn(b, k, n);
    const std::uint64_t bk = checked_pow(b, k, std::uint64_t{1} << 40);
    const unsigned __int128 len = static_cast<unsigned __int128>(n) * bk;
    if (len > (std::uint64_t{1} << 32))
        throw BudgetError("necklace length overflows any feasible enumeration");
    const long L = static_cast<long>(len);
    std::uint64_t total;
    try {
        total = checked_pow(b, static_cast<int>(L), budget);
    } catch (const std::invalid_argument&) {
        throw BudgetError("b^(n*b^k) exceeds the brute-force budget of " +
                          std::to_string(budget) + " candidates; use the counting formula");
    }
    L_out = L;
    return total;
}

} // namespace

CountReport brute_force_count_serial(int b, int k, long n, std::uint64_t budget) {
    long L = 0;
    const std::uint64_t total = brute_candidates(b, k, n, budget, L);
    return report_from_tally(b, k, n, brute_force_range(b, k, n, L, 0, total));
}

CountReport brute_force_count(int b, int k, long n, std::uint64_t budget, int threads) {
    long L = 0;
    const std::uint64_t total = brute_candidates(b, k, n, budget, L);

    int workers = 1;
#ifdef _OPENMP
    workers = threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
#endif
    if (workers < 1)
        workers = 1;

    // Many more shards than workers: candidates rejected by the canonical
    // filter cost almost nothing, so equal ranges are badly unbalanced.
    std::uint64_t shards = static_cast<std::uint64_t>(workers) * 64;
    if (shards > total)
        shards = total;

    std::vector<BruteTally> partial(shards);
#ifdef _OPENMP
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
#endif
    for (long long t = 0; t < static_cast<long long>(shards); ++t) {
        const std::uint64_t lo = total / shards * t + std::min<std::uint64_t>(t, total % shards);
        const std::uint64_t hi =
            total / shards * (t + 1) + std::min<std::uint64_t>(t + 1, total % shards);
        partial[t] = brute_force_range(b, k, n, L, lo, hi);
    }
    BruteTally tally;
    for (const auto& p : partial)
        tally.merge(p);
    return report_from_tally(b, k, n, tally);
}

CountReport circuit_enumeration_count(int b, int k, long n, std::size_t edge_budget) {
    validate_bkn(b, k, n);
    const AstuteGraph g = build_astute(b, k - 1, n);
    const CircuitEnumeration enumeration = enumerate_euler_circuits(g, edge_budget);
    const long bk = static_cast<long>(checked_pow(b, k, std::uint64_t{1} << 40));

    std::map<Word, long> multiplicity;
    for (const auto& c : enumeration.circuits)
        ++multiplicity[canonical_rotation(circuit_to_word(g, c))];

    std::map<long, std::pair<long, long>> groups;   // j -> (necklaces, circuits)
    for (const auto& [neck, mult] : multiplicity) {
        const long p = period(neck);
        if (p % bk != 0)
            throw std::logic_error("circuit necklace period is not a multiple of b^k");
        const long j = p / bk;
        if (mult != j)
            throw std::logic_error("necklace of period j*b^k seen from " +
                                   std::to_string(mult) + " circuits instead of " +
                                   std::to_string(j));
        groups[j].first += 1;
        groups[j].second += mult;
    }

    CountReport rep;
    rep.b = b;
    rep.k = k;
    rep.n = n;
    rep.method = CountMethod::CircuitEnumeration;
    rep.total = BigCount(static_cast<unsigned long>(multiplicity.size()));
    for (auto [j, counts] : groups) {
        DivisorLine line;
        line.j = j;
        line.euler_circuits = BigCount(counts.second);
        line.irreducible = BigCount(counts.first);
        if (j == n)
            rep.irreducible = line.irreducible;
        rep.per_divisor.push_back(std::move(line));
    }
    return rep;
}

} // namespace necklaces
