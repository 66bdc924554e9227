#pragma once

#include "necklaces/number_theory.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace necklaces {

enum class CountMethod { Formula, BruteForce, CircuitEnumeration };

std::string to_string(CountMethod m);

// One line per divisor j of n with d_factor(b,n) | j. The period of a
// (k,n)-perfect necklace is always j*b^k for such a j.
struct DivisorLine {
    long j = 0;
    BigCount euler_circuits = 0;   // e(j); observed circuit count for the
                                   // circuit-enumeration method, 0 for brute force
    long phi = 0;                  // phi(n/j); formula method only
    BigCount irreducible = 0;      // p(j), irreducible (k,j)-perfect necklaces
};

struct CountReport {
    int b = 0;
    int k = 0;
    long n = 0;
    CountMethod method = CountMethod::Formula;
    BigCount total = 0;            // (k,n)-perfect necklaces
    BigCount irreducible = 0;      // those of full period n*b^k
    std::vector<DivisorLine> per_divisor;

    nlohmann::json to_json() const;   // big integers as decimal strings
};

/// Number of Eulerian circuits in G_{k-1,j}: (b!)^(j*b^(k-1)) / b^k.
/// The division is exact; a remainder would be an implementation bug.
BigCount euler_count_formula(int b, int k, long j);

/// Closed-form count of (k,n)-perfect necklaces:
/// (1/n) * sum over j with d_factor(b,n) | j | n of e(j) * phi(n/j).
CountReport perfect_count(int b, int k, long n);

/// p(j): irreducible (k,j)-perfect necklaces, by Moebius inversion of
/// e(j) = sum over d_factor(b,j) | l | j of l * p(l). That identity is
/// re-checked on every call.
BigCount irreducible_count(int b, int k, long j);

inline constexpr std::uint64_t default_brute_budget = std::uint64_t{1} << 26;

/// Independent oracle: enumerate all b^(n*b^k) words of necklace length,
/// keep the ones equal to their own canonical rotation (one representative
/// per necklace) and count the perfect ones, classified by period. Refuses
/// candidate counts above the budget.
CountReport brute_force_count_serial(int b, int k, long n,
                                     std::uint64_t budget = default_brute_budget);

/// Same count with the candidate range sharded across OpenMP threads
/// (0 = all cores). Counts merge by addition, so the result does not
/// depend on the shard count.
CountReport brute_force_count(int b, int k, long n,
                              std::uint64_t budget = default_brute_budget,
                              int threads = 0);

/// Third route: enumerate the Eulerian circuits of G_{k-1,n}, map each to
/// its necklace and deduplicate. A necklace of period j*b^k must show up
/// from exactly j circuits; that multiplicity is checked here.
CountReport circuit_enumeration_count(int b, int k, long n,
                                      std::size_t edge_budget = 32);

} // namespace necklaces
