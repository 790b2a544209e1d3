#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace subword {

enum class Gen : std::uint8_t { A, B };

/// One signed letter a^{±1} or b^{±1} of the free monoid on {a,b} and inverses.
struct Letter {
    Gen gen;
    std::int8_t sign; // exactly +1 or -1

    friend bool operator==(Letter, Letter) = default;
};

constexpr Letter inverse(Letter l) { return {l.gen, static_cast<std::int8_t>(-l.sign)}; }

// Letter constants for building words in code and tests.
namespace letters {
inline constexpr Letter a{Gen::A, +1};
inline constexpr Letter a_inv{Gen::A, -1};
inline constexpr Letter b{Gen::B, +1};
inline constexpr Letter b_inv{Gen::B, -1};
} // namespace letters

/// A possibly-unreduced word: a plain letter sequence, the monoid element.
/// Unreduced words are first-class; nothing here cancels letters implicitly.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> ls) : letters(ls) {}
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    friend bool operator==(const Word&, const Word&) = default;
};

inline Word concat(const Word& u, const Word& v) {
    Word r;
    r.letters.reserve(u.size() + v.size());
    r.letters.insert(r.letters.end(), u.letters.begin(), u.letters.end());
    r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
    return r;
}

/// Group inverse: reverse the letters and negate every sign.
inline Word invert(const Word& u) {
    Word r;
    r.letters.reserve(u.size());
    for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
        r.letters.push_back(inverse(*it));
    return r;
}

inline bool is_reduced(const Word& u) {
    for (std::size_t i = 1; i < u.size(); ++i)
        if (u.letters[i] == inverse(u.letters[i - 1])) return false;
    return true;
}

/// A freely reduced word; the canonical representative of a free-group element.
/// Only obtainable through reduce(), which establishes the no-cancellation invariant.
class ReducedWord {
public:
    ReducedWord() = default;

    const Word& word() const { return word_; }
    operator const Word&() const { return word_; }
    std::size_t size() const { return word_.size(); }
    bool empty() const { return word_.empty(); }

    friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
    friend ReducedWord reduce(const Word&);

private:
    explicit ReducedWord(Word w) : word_(std::move(w)) {}
    Word word_;
};

/// Full free reduction by stack cancellation. Idempotent.
inline ReducedWord reduce(const Word& u) {
    std::vector<Letter> out;
    out.reserve(u.size());
    for (Letter l : u.letters) {
        if (!out.empty() && out.back() == inverse(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return ReducedWord(Word(std::move(out)));
}

/// [u, v] = u v u^{-1} v^{-1}, left unreduced.
inline Word commutator(const Word& u, const Word& v) {
    return concat(concat(u, v), concat(invert(u), invert(v)));
}

/// [a, [a, ... [a, b] ...]] with k occurrences of a.
/// Unreduced length satisfies L(0) = 1, L(k) = 2 L(k-1) + 2, i.e. 3*2^k - 2.
inline Word iterated_commutator(int k) {
    if (k < 0) throw std::domain_error("iterated_commutator: k must be >= 0");
    Word w{letters::b};
    Word a_word{letters::a};
    for (int i = 0; i < k; ++i) w = commutator(a_word, w);
    return w;
}

inline std::string generator_name(Gen g) { return g == Gen::A ? "a" : "b"; }

/// Prints a word in the input grammar, grouping runs of one signed letter
/// as "g^k" / "g^-k". Re-parses to the identical letter sequence.
inline std::string to_string(const Word& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w.letters[j] == w.letters[i]) ++j;
        std::size_t run = j - i;
        if (!out.empty()) out += ' ';
        out += generator_name(w.letters[i].gen);
        if (w.letters[i].sign < 0)
            out += "^-" + std::to_string(run);
        else if (run > 1)
            out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

} // namespace subword
