#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subword/parse.hpp"
#include "subword/word.hpp"

namespace subword {

enum class TwistGen : std::uint8_t { Alpha, Beta };

/// One signed Dehn twist, D_alpha^{±1} or D_beta^{±1}.
struct Twist {
    TwistGen gen;
    std::int8_t sign;

    friend bool operator==(Twist, Twist) = default;
};

constexpr Twist inverse(Twist t) { return {t.gen, static_cast<std::int8_t>(-t.sign)}; }

/// A mapping class as a formal sequence of signed twists.
struct TwistWord {
    std::vector<Twist> twists;

    std::size_t size() const { return twists.size(); }
    bool empty() const { return twists.empty(); }

    friend bool operator==(const TwistWord&, const TwistWord&) = default;
};

inline TwistWord concat(const TwistWord& u, const TwistWord& v) {
    TwistWord r;
    r.twists.reserve(u.size() + v.size());
    r.twists.insert(r.twists.end(), u.twists.begin(), u.twists.end());
    r.twists.insert(r.twists.end(), v.twists.begin(), v.twists.end());
    return r;
}

inline TwistWord invert(const TwistWord& u) {
    TwistWord r;
    r.twists.reserve(u.size());
    for (auto it = u.twists.rbegin(); it != u.twists.rend(); ++it)
        r.twists.push_back(inverse(*it));
    return r;
}

inline TwistWord commutator(const TwistWord& u, const TwistWord& v) {
    return concat(concat(u, v), concat(invert(u), invert(v)));
}

/// [D_alpha, [D_alpha, ... [D_alpha, D_beta] ...]] with k copies of D_alpha,
/// flattened; mirrors iterated_commutator on words letter for letter.
inline TwistWord twist_iterated_commutator(int k) {
    if (k < 0) throw std::domain_error("twist_iterated_commutator: k must be >= 0");
    TwistWord w{{Twist{TwistGen::Beta, +1}}};
    TwistWord da{{Twist{TwistGen::Alpha, +1}}};
    for (int i = 0; i < k; ++i) w = commutator(da, w);
    return w;
}

/// Morphism of the three-basepoint fundamental groupoid, in normal form:
///   Loop    w            : p0 -> p0
///   ToP1    w . d_alpha  : p0 -> p1
///   FromP2  d_alphabeta . w : p2 -> p0
enum class MorphKind : std::uint8_t { Loop, ToP1, FromP2 };

struct GroupoidMorphism {
    MorphKind kind = MorphKind::Loop;
    Word w;

    friend bool operator==(const GroupoidMorphism&, const GroupoidMorphism&) = default;
};

namespace detail {

// Letterwise substitution: the non-fixed generator g gets conjugated,
// g^e -> c^s g^e c^{-s} where c is the twist's own curve generator and s its sign.
inline void append_twisted(std::vector<Letter>& out, Letter l, Twist t) {
    const bool fixed = (t.gen == TwistGen::Alpha) == (l.gen == Gen::A);
    if (fixed) {
        out.push_back(l);
        return;
    }
    const Gen c = t.gen == TwistGen::Alpha ? Gen::A : Gen::B;
    out.push_back({c, t.sign});
    out.push_back(l);
    out.push_back({c, static_cast<std::int8_t>(-t.sign)});
}

} // namespace detail

/// Action of a single signed twist, purely syntactic (no reduction).
///
/// The generator actions are D_alpha: a -> a, b -> a b a^-1, d_alpha -> a d_alpha,
/// d_alphabeta -> d_alphabeta a^-1, and symmetrically for D_beta (which fixes b
/// and d_alpha, and sends d_alphabeta -> d_alphabeta b^-1); negative twists use
/// the inverted substitutions. The boundary letters of the normal forms absorb
/// the d-images: for ToP1, a^s (w d_alpha) = (c^s w c^-s)(c^s d_alpha) appends
/// c^s only when the twist is D_alpha^s; for FromP2, the image prepends c^-s.
inline GroupoidMorphism apply_twist(Twist t, const GroupoidMorphism& m) {
    GroupoidMorphism r;
    r.kind = m.kind;
    r.w.letters.reserve(3 * m.w.size() + 1);
    const Gen c = t.gen == TwistGen::Alpha ? Gen::A : Gen::B;
    if (m.kind == MorphKind::FromP2)
        r.w.letters.push_back({c, static_cast<std::int8_t>(-t.sign)});
    for (Letter l : m.w.letters) detail::append_twisted(r.w.letters, l, t);
    if (m.kind == MorphKind::ToP1 && t.gen == TwistGen::Alpha)
        r.w.letters.push_back({Gen::A, t.sign});
    return r;
}

/// Action of a twist word: the last twist in the sequence acts first, so that
/// a product g h acts as the composite g ∘ h. The morphism word is freely
/// reduced after every step — reduction never changes the morphism, and the
/// raw substitution output would otherwise grow exponentially in |tw|.
inline GroupoidMorphism apply_twist_word(const TwistWord& tw, GroupoidMorphism m) {
    for (auto it = tw.twists.rbegin(); it != tw.twists.rend(); ++it) {
        m = apply_twist(*it, std::move(m));
        m.w = reduce(m.w).word();
    }
    return m;
}

/// e_alpha(n): image of d_alpha under the iterated twist commutator with
/// n-2 copies of D_alpha. Reduced; equal to iterated_commutator(n-2) . d_alpha
/// for n >= 3 (for n = 2 the twist word degenerates to the single
/// non-commutator D_beta, which fixes d_alpha outright).
inline GroupoidMorphism compute_e_alpha(int n) {
    if (n < 2) throw std::domain_error("compute_e_alpha: n must be >= 2");
    return apply_twist_word(twist_iterated_commutator(n - 2), {MorphKind::ToP1, {}});
}

/// e_alphabeta(n): image of d_alphabeta under the same mapping class;
/// equal to d_alphabeta . invert(iterated_commutator(n-2)) for all n >= 2.
inline GroupoidMorphism compute_e_alphabeta(int n) {
    if (n < 2) throw std::domain_error("compute_e_alphabeta: n must be >= 2");
    return apply_twist_word(twist_iterated_commutator(n - 2), {MorphKind::FromP2, {}});
}

inline std::string twist_name(TwistGen g) { return g == TwistGen::Alpha ? "Da" : "Db"; }

inline std::string to_string(const TwistWord& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w.twists[j] == w.twists[i]) ++j;
        std::size_t run = j - i;
        if (!out.empty()) out += ' ';
        out += twist_name(w.twists[i].gen);
        if (w.twists[i].sign < 0)
            out += "^-" + std::to_string(run);
        else if (run > 1)
            out += "^" + std::to_string(run);
        i = j;
    }
    return out;
}

/// Same grammar as words, with atoms "Da", "Db".
inline TwistWord parse_twist_word(std::string_view text) {
    static constexpr std::pair<std::string_view, Twist> atoms[] = {
        {"Da", Twist{TwistGen::Alpha, +1}},
        {"Db", Twist{TwistGen::Beta, +1}},
    };
    detail::SeqParser<Twist> parser(text, atoms);
    return TwistWord{parser.parse()};
}

inline std::string to_string(const GroupoidMorphism& m) {
    std::string ws = to_string(m.w);
    switch (m.kind) {
        case MorphKind::Loop:
            return ws;
        case MorphKind::ToP1:
            return ws.empty() ? "d_alpha" : ws + " d_alpha";
        case MorphKind::FromP2:
            return ws.empty() ? "d_alphabeta" : "d_alphabeta " + ws;
    }
    return ws;
}

/// Parses "loop:<word>", "d_alpha-target:<word>" or "d_alphabeta-source:<word>".
inline GroupoidMorphism parse_morphism(std::string_view text) {
    constexpr std::string_view kLoop = "loop:";
    constexpr std::string_view kToP1 = "d_alpha-target:";
    constexpr std::string_view kFromP2 = "d_alphabeta-source:";
    if (text.starts_with(kLoop))
        return {MorphKind::Loop, parse_word(text.substr(kLoop.size()))};
    if (text.starts_with(kToP1))
        return {MorphKind::ToP1, parse_word(text.substr(kToP1.size()))};
    if (text.starts_with(kFromP2))
        return {MorphKind::FromP2, parse_word(text.substr(kFromP2.size()))};
    throw parse_error("expected \"loop:\", \"d_alpha-target:\" or \"d_alphabeta-source:\"", 0);
}

} // namespace subword
