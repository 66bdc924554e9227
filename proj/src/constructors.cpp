#include "necklaces/constructors.hpp"

#include "necklaces/number_theory.hpp"
#include "necklaces/verifier.hpp"

#include <numeric>

namespace necklaces {

Word arithmetic_necklace(int b, int k, std::uint64_t r) {
    if (b < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    if (k < 1)
        throw std::invalid_argument("word length must be at least 1");
    if (std::gcd(r, static_cast<std::uint64_t>(b)) != 1)
        throw std::invalid_argument("r must be coprime with b");
    const std::uint64_t B = checked_pow(b, k, std::uint64_t{1} << 40);
    const std::uint64_t step = r % B;

    Word out;
    out.reserve(static_cast<std::size_t>(B) * k);
    std::uint64_t m = 0;
    for (std::uint64_t i = 0; i < B; ++i) {
        const Word block = index_to_word(m, k, b);
        out.insert(out.end(), block.begin(), block.end());
        m += step;
        if (m >= B)
            m -= B;
    }
    return out;
}

Word ordered_necklace(int b, int k) {
    return arithmetic_necklace(b, k, 1);
}

Word permute_digits(const Word& s, const std::vector<Symbol>& pi) {
    const int b = static_cast<int>(pi.size());
    if (b < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    std::vector<bool> hit(pi.size(), false);
    for (Symbol v : pi) {
        if (v < 0 || v >= b || hit[v])
            throw std::invalid_argument("pi is not a bijection on the alphabet");
        hit[v] = true;
    }
    Word out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= b)
            throw std::invalid_argument("symbol outside the alphabet");
        out[i] = pi[s[i]];
    }
    return out;
}

Word reflect(Word s) {
    std::reverse(s.begin(), s.end());
    return s;
}

Word repeat_necklace(const Word& N, int b, int k, long j, long n) {
    if (j < 1 || n < 1)
        throw std::invalid_argument("repeat_necklace wants j >= 1 and n >= 1");
    if (n % j != 0)
        throw std::invalid_argument("j must divide n");
    const long d = d_factor(b, n);
    if (j % d != 0)
        throw std::invalid_argument("d_factor(b,n) = " + std::to_string(d) +
                                    " must divide j");
    // Not trusted: the precondition on N is checked outright.
    if (!is_kn_perfect(N, b, k, j).is_perfect)
        throw std::invalid_argument("N is not (k,j)-perfect");

    const long reps = n / j;
    Word out;
    out.reserve(N.size() * static_cast<std::size_t>(reps));
    for (long t = 0; t < reps; ++t)
        out.insert(out.end(), N.begin(), N.end());
    return out;
}

} // namespace necklaces
