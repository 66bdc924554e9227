#include "necklaces/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace necklaces {

std::vector<std::pair<long, int>> factorize(long n) {
    if (n < 1)
        throw std::invalid_argument("factorize wants n >= 1");
    std::vector<std::pair<long, int>> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

long euler_phi(long n) {
    if (n < 1)
        throw std::invalid_argument("euler_phi wants n >= 1");
    long phi = n;
    for (auto [p, e] : factorize(n))
        phi = phi / p * (p - 1);
    return phi;
}

int moebius(long n) {
    if (n < 1)
        throw std::invalid_argument("moebius wants n >= 1");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

long d_factor(long m, long n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("d_factor wants m, n >= 1");
    long d = 1;
    for (auto [p, e] : factorize(m)) {
        long rest = n;
        while (rest % p == 0) {
            rest /= p;
            d *= p;
        }
    }
    return d;
}

std::vector<long> divisors(long n) {
    if (n < 1)
        throw std::invalid_argument("divisors wants n >= 1");
    std::vector<long> out{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t t = 0; t < base; ++t)
                out.push_back(out[t] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long gcd(long a, long b) {
    return std::gcd(a, b);
}

BigCount big_factorial(unsigned long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigCount big_pow(const BigCount& base, unsigned long exp) {
    BigCount r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

} // namespace necklaces
