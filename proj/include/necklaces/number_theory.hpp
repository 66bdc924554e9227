#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

namespace necklaces {

// Exact arbitrary-precision count. Everything in the counting formulas is
// integer arithmetic; no floating point anywhere.
using BigCount = mpz_class;

/// Euler's totient: how many of 1..n are coprime with n. n >= 1.
long euler_phi(long n);

/// Moebius function: 0 if a squared prime divides n, else (-1)^(#primes).
int moebius(long n);

/// Product over primes p dividing m of p^(exponent of p in n).
/// Divides n; equals 1 exactly when gcd(m,n) = 1.
long d_factor(long m, long n);

/// Divisors of n in ascending order. n >= 1.
std::vector<long> divisors(long n);

long gcd(long a, long b);

BigCount big_factorial(unsigned long n);
BigCount big_pow(const BigCount& base, unsigned long exp);

/// (prime, exponent) pairs, primes ascending. n >= 1.
std::vector<std::pair<long, int>> factorize(long n);

} // namespace necklaces
