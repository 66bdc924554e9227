#pragma once

#include "necklaces/words.hpp"

#include <cstdint>

namespace necklaces {

/// Concatenation of the base-b words of length k along the arithmetic
/// sequence 0, r, 2r, ..., (b^k-1)r mod b^k. For r coprime with b the
/// result is a (k,k)-perfect necklace of length k*b^k. Errors if
/// gcd(r,b) != 1 or b^k exceeds 2^40.
Word arithmetic_necklace(int b, int k, std::uint64_t r);

/// All words of length k in lexicographic order; arithmetic_necklace with
/// r = 1.
Word ordered_necklace(int b, int k);

/// Apply a symbol permutation pi (pi[s] = image of s, |pi| = b) to every
/// position. Preserves (k,n)-perfection. Errors if pi is not a bijection.
Word permute_digits(const Word& s, const std::vector<Symbol>& pi);

/// Reverse the word. Preserves (k,n)-perfection.
Word reflect(Word s);

/// N repeated n/j times. Requires N to be (k,j)-perfect (verified here, not
/// trusted), d_factor(b,n) | j and j | n; then the result is (k,n)-perfect.
Word repeat_necklace(const Word& N, int b, int k, long j, long n);

} // namespace necklaces
