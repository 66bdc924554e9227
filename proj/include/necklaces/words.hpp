#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace necklaces {

using Symbol = int;

// A word is a finite sequence of symbols 0..b-1, position 0 first.
using Word = std::vector<Symbol>;

// Ordered alphabet {0, ..., size-1}. Everything here needs at least two
// symbols; a one-letter alphabet has a single word of each length and no
// content to test.
struct Alphabet {
    int size;

    explicit Alphabet(int b) : size(b) {
        if (b < 2)
            throw std::invalid_argument("alphabet size must be at least 2");
    }
};

/// Index of the lexicographically least rotation of w (Booth, O(|w|)).
std::size_t least_rotation_index(const Word& w);

/// Lexicographically least rotation of w. Errors on the empty word.
Word canonical_rotation(const Word& w);

/// Cyclic shift: (shift(w,1))(i) = w((i+1) mod |w|). Negative i shifts the
/// other way; shift(shift(w,i),-i) == w.
Word shift(const Word& w, long long i);

/// Smallest L >= 1 with w(i) == w((i+L) mod |w|) for all i. Always divides
/// |w|; the word is irreducible when period == |w|.
long period(const Word& w);

/// All i in [0,|s|) where w occurs in s read cyclically from i, ascending.
/// Requires |w| <= |s|.
std::vector<long> cyclic_occurrences(const Word& s, const Word& w);

/// True iff w matches s cyclically starting at position i. The window may
/// wrap around s any number of times, so |w| > |s| is fine.
bool cyclic_match_at(const Word& s, const Word& w, long i);

// Base-b value of w, most significant symbol first, and its inverse.
std::uint64_t word_to_index(const Word& w, int b);
Word index_to_word(std::uint64_t m, int k, int b);

/// b^k as uint64, or an error if the value would exceed `ceiling`.
std::uint64_t checked_pow(int b, int k, std::uint64_t ceiling);

// Text form: digit string for b <= 10, digits then lowercase letters for
// b <= 36, bracketed decimal list "[0,17,42]" beyond. parse_word also
// accepts the bracketed form for any b and rejects symbols >= b.
std::string format_word(const Word& w, int b);
Word parse_word(const std::string& text, int b);

// Rotation-equivalence class of a non-empty word, keyed by its canonical
// (lexicographically least) rotation. Two words compare equal here exactly
// when one is a rotation of the other.
class Necklace {
public:
    explicit Necklace(const Word& w) : canonical_(canonical_rotation(w)) {}

    const Word& canonical() const { return canonical_; }
    long length() const { return static_cast<long>(canonical_.size()); }

    friend bool operator==(const Necklace&, const Necklace&) = default;
    friend auto operator<=>(const Necklace&, const Necklace&) = default;

private:
    Word canonical_;
};

// One full period of an infinite periodic sequence x, x_i = w(i mod |w|).
struct PeriodicSequence {
    Word period_word;

    explicit PeriodicSequence(Word w) : period_word(std::move(w)) {
        if (period_word.empty())
            throw std::invalid_argument("periodic sequence needs a non-empty period");
    }

    Symbol at(std::uint64_t i) const { return period_word[i % period_word.size()]; }
    long length() const { return static_cast<long>(period_word.size()); }
};

} // namespace necklaces
