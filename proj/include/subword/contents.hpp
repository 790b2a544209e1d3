#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "subword/integer.hpp"
#include "subword/parse.hpp"
#include "subword/word.hpp"

namespace subword {

/// The subword pattern a^k (terminal_b false) or a^k b (terminal_b true).
struct Pattern {
    int k = 0;
    bool terminal_b = false;

    friend bool operator==(Pattern, Pattern) = default;
};

inline std::string to_string(Pattern p) {
    std::string out = "a^" + std::to_string(p.k);
    if (p.terminal_b) out += " b";
    return out;
}

/// Accepts "a^k", "a^k b", "a", "a b", "b" (= a^0 b) and "" (= a^0).
inline Pattern parse_pattern(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    Pattern pat;
    skip_ws();
    if (pos < text.size() && text[pos] == 'a') {
        ++pos;
        pat.k = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            std::size_t start = pos;
            long k = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                k = k * 10 + (text[pos] - '0');
                if (k > 1000000) throw parse_error("pattern exponent too large", start);
                ++pos;
            }
            if (pos == start) throw parse_error("expected a nonnegative integer", pos);
            pat.k = static_cast<int>(k);
        }
    }
    skip_ws();
    if (pos < text.size() && text[pos] == 'b') {
        ++pos;
        pat.terminal_b = true;
    }
    skip_ws();
    if (pos != text.size()) throw parse_error("expected pattern \"a^k\" or \"a^k b\"", pos);
    return pat;
}

/// One signed occurrence: nondecreasing 1-based positions into the host word,
/// repeats only at +1 letters; sign is the product of the letters' signs.
struct Occurrence {
    std::vector<int> indices;
    int sign = +1;

    friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct OracleBounds {
    std::size_t max_length = 16;
    int max_k = 6;
};

/// Raised when a word/pattern is too large for exhaustive enumeration;
/// the caller should fall back to content().
class oracle_bound_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive oracle: generates every nondecreasing index sequence of the
/// pattern's length and keeps those satisfying the occurrence conditions.
/// Deliberately brute force; the DP in content() is checked against this.
inline std::vector<Occurrence> enumerate_occurrences(const Word& w, Pattern pat,
                                                     OracleBounds bounds = {}) {
    if (w.size() > bounds.max_length)
        throw oracle_bound_error("word length " + std::to_string(w.size()) +
                                 " exceeds oracle bound " + std::to_string(bounds.max_length));
    if (pat.k > bounds.max_k)
        throw oracle_bound_error("pattern k = " + std::to_string(pat.k) +
                                 " exceeds oracle bound " + std::to_string(bounds.max_k));

    const int m = pat.k + (pat.terminal_b ? 1 : 0);
    const int h = static_cast<int>(w.size());
    std::vector<Occurrence> found;
    std::vector<int> idx(static_cast<std::size_t>(m));

    auto valid = [&]() -> bool {
        for (int j = 0; j < m; ++j) {
            const Letter& l = w.letters[static_cast<std::size_t>(idx[j] - 1)];
            bool want_b = pat.terminal_b && j == m - 1;
            if ((l.gen == Gen::B) != want_b) return false;
            if (j + 1 < m && idx[j] == idx[j + 1] && l.sign != +1) return false;
        }
        return true;
    };
    auto record = [&]() {
        if (!valid()) return;
        int sign = 1;
        for (int j = 0; j < m; ++j) sign *= w.letters[static_cast<std::size_t>(idx[j] - 1)].sign;
        found.push_back({idx, sign});
    };

    // Enumerate nondecreasing sequences in [1, h]^m.
    auto rec = [&](auto&& self, int j, int lo) -> void {
        if (j == m) {
            record();
            return;
        }
        for (int i = lo; i <= h; ++i) {
            idx[static_cast<std::size_t>(j)] = i;
            self(self, j + 1, i);
        }
    };
    if (m == 0) {
        found.push_back({{}, +1}); // the unique empty occurrence of a^0
    } else {
        rec(rec, 0, 1);
    }
    return found;
}

/// Signed occurrence count by a left-to-right scan in O(h*(k+1)) time.
///
/// c[j] holds the a^j-content of the processed prefix (c[0] = 1 throughout);
/// with a terminal b, c[k+1] accumulates the full-pattern content. At an
/// a-letter of sign e, c[j] += e * c[j-1]: ascending j for e = +1 lets the
/// letter feed its own updates (a +1 position may repeat inside one
/// occurrence), descending j for e = -1 uses only pre-update values (a -1
/// position may be used at most once). At a b-letter, c[k+1] += e * c[k].
inline Int content(const Word& w, Pattern pat) {
    const int k = pat.k;
    std::vector<Int> c(static_cast<std::size_t>(k) + 2, 0);
    c[0] = 1;
    for (const Letter& l : w.letters) {
        if (l.gen == Gen::A) {
            if (l.sign > 0) {
                for (int j = 1; j <= k; ++j) c[j] += c[j - 1];
            } else {
                for (int j = k; j >= 1; --j) c[j] -= c[j - 1];
            }
        } else if (pat.terminal_b) {
            if (l.sign > 0)
                c[static_cast<std::size_t>(k) + 1] += c[k];
            else
                c[static_cast<std::size_t>(k) + 1] -= c[k];
        }
    }
    return pat.terminal_b ? c[static_cast<std::size_t>(k) + 1] : c[static_cast<std::size_t>(k)];
}

/// Sum of the signs of the b-letters; the homomorphism F<a,b> -> Z
/// sending a -> 0, b -> 1, evaluated on the underlying monoid element.
inline long b_exponent_sum(const Word& w) {
    long sum = 0;
    for (const Letter& l : w.letters)
        if (l.gen == Gen::B) sum += l.sign;
    return sum;
}

} // namespace subword
