#include "necklaces/words.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>
#include <sstream>

namespace necklaces {

namespace {

void require_nonempty(const Word& w) {
    if (w.empty())
        throw std::invalid_argument("empty word has no rotation class");
}

} // namespace

std::size_t least_rotation_index(const Word& w) {
    require_nonempty(w);
    const std::size_t n = w.size();
    // Booth's least-rotation algorithm over the doubled word.
    std::vector<std::ptrdiff_t> fail(2 * n, -1);
    std::size_t best = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        const Symbol sj = w[j % n];
        std::ptrdiff_t i = fail[j - best - 1];
        while (i != -1 && sj != w[(best + i + 1) % n]) {
            if (sj < w[(best + i + 1) % n])
                best = j - i - 1;
            i = fail[i];
        }
        if (i == -1 && sj != w[(best + i + 1) % n]) {
            if (sj < w[(best + i + 1) % n])
                best = j;
            fail[j - best] = -1;
        } else {
            fail[j - best] = i + 1;
        }
    }
    return best % n;
}

Word canonical_rotation(const Word& w) {
    return shift(w, static_cast<long long>(least_rotation_index(w)));
}

Word shift(const Word& w, long long i) {
    require_nonempty(w);
    const long long n = static_cast<long long>(w.size());
    const long long off = ((i % n) + n) % n;
    Word out(w.size());
    for (long long p = 0; p < n; ++p)
        out[p] = w[(p + off) % n];
    return out;
}

long period(const Word& w) {
    require_nonempty(w);
    const long n = static_cast<long>(w.size());
    for (long L = 1; L <= n; ++L) {
        if (n % L != 0)
            continue;
        bool ok = true;
        for (long i = 0; i < n && ok; ++i)
            ok = w[i] == w[(i + L) % n];
        if (ok)
            return L;
    }
    return n;   // unreachable: L = n always agrees
}

bool cyclic_match_at(const Word& s, const Word& w, long i) {
    const std::size_t n = s.size();
    for (std::size_t t = 0; t < w.size(); ++t)
        if (w[t] != s[(static_cast<std::size_t>(i) + t) % n])
            return false;
    return true;
}

std::vector<long> cyclic_occurrences(const Word& s, const Word& w) {
    if (w.size() > s.size())
        throw std::invalid_argument("pattern longer than the cyclic word");
    require_nonempty(s);
    std::vector<long> hits;
    for (long i = 0; i < static_cast<long>(s.size()); ++i)
        if (cyclic_match_at(s, w, i))
            hits.push_back(i);
    return hits;
}

std::uint64_t checked_pow(int b, int k, std::uint64_t ceiling) {
    if (b < 1 || k < 0)
        throw std::invalid_argument("checked_pow wants b >= 1, k >= 0");
    std::uint64_t v = 1;
    for (int i = 0; i < k; ++i) {
        if (v > ceiling / static_cast<std::uint64_t>(b))
            throw std::invalid_argument("power exceeds the allowed ceiling");
        v *= static_cast<std::uint64_t>(b);
    }
    if (v > ceiling)
        throw std::invalid_argument("power exceeds the allowed ceiling");
    return v;
}

std::uint64_t word_to_index(const Word& w, int b) {
    if (b < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    std::uint64_t v = 0;
    const std::uint64_t ub = static_cast<std::uint64_t>(b);
    for (Symbol s : w) {
        if (s < 0 || s >= b)
            throw std::invalid_argument("symbol outside the alphabet");
        if (v > (std::numeric_limits<std::uint64_t>::max() - static_cast<std::uint64_t>(s)) / ub)
            throw std::invalid_argument("word index overflows 64 bits");
        v = v * ub + static_cast<std::uint64_t>(s);
    }
    return v;
}

Word index_to_word(std::uint64_t m, int k, int b) {
    if (b < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    if (k < 0)
        throw std::invalid_argument("word length must be non-negative");
    // When b^k does not fit in 64 bits every m is in range.
    std::uint64_t limit = 1;
    bool bounded = true;
    for (int i = 0; i < k && bounded; ++i) {
        if (limit > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(b))
            bounded = false;
        else
            limit *= static_cast<std::uint64_t>(b);
    }
    if (bounded && m >= limit)
        throw std::invalid_argument("index out of range for words of this length");
    Word w(static_cast<std::size_t>(k), 0);
    for (int i = k - 1; i >= 0; --i) {
        w[i] = static_cast<Symbol>(m % static_cast<std::uint64_t>(b));
        m /= static_cast<std::uint64_t>(b);
    }
    return w;
}

std::string format_word(const Word& w, int b) {
    if (b < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    for (Symbol s : w)
        if (s < 0 || s >= b)
            throw std::invalid_argument("symbol outside the alphabet");
    std::ostringstream out;
    if (b <= 36) {
        for (Symbol s : w)
            out << static_cast<char>(s < 10 ? '0' + s : 'a' + (s - 10));
    } else {
        out << '[';
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                out << ',';
            out << w[i];
        }
        out << ']';
    }
    return out.str();
}

Word parse_word(const std::string& text, int b) {
    if (b < 2)
        throw std::invalid_argument("alphabet size must be at least 2");
    Word w;
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']')
            throw std::invalid_argument("unterminated bracketed word");
        std::string body = text.substr(1, text.size() - 2);
        if (!body.empty()) {
            std::istringstream in(body);
            std::string item;
            while (std::getline(in, item, ',')) {
                std::size_t used = 0;
                long v = std::stol(item, &used);
                if (used != item.size())
                    throw std::invalid_argument("bad symbol '" + item + "' in word");
                if (v < 0 || v >= b)
                    throw std::invalid_argument("symbol " + std::to_string(v) +
                                                " outside alphabet of size " + std::to_string(b));
                w.push_back(static_cast<Symbol>(v));
            }
            if (!body.empty() && body.back() == ',')
                throw std::invalid_argument("trailing comma in bracketed word");
        }
        return w;
    }
    if (b > 36)
        throw std::invalid_argument("alphabets beyond 36 symbols use the bracketed form");
    for (char c : text) {
        int v;
        if (c >= '0' && c <= '9')
            v = c - '0';
        else if (c >= 'a' && c <= 'z')
            v = 10 + (c - 'a');
        else
            throw std::invalid_argument(std::string("bad character '") + c + "' in word");
        if (v >= b)
            throw std::invalid_argument(std::string("symbol '") + c +
                                        "' outside alphabet of size " + std::to_string(b));
        w.push_back(v);
    }
    return w;
}

} // namespace necklaces
