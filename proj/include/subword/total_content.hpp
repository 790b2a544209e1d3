#pragma once

#include <cstddef>
#include <vector>

#include "subword/algebra_r.hpp"
#include "subword/contents.hpp"
#include "subword/word.hpp"

namespace subword {

/// Image of a single letter under the total content:
///   a -> 1 + x + ... + x^N,  a^-1 -> 1 - x,  b -> 1 + y,  b^-1 -> 1 - y.
/// The value for a^-1 follows from enumeration (the one a^1-occurrence has
/// sign -1, repeats at a -1 letter are forbidden) and is forced by
/// multiplicativity: Cont(a) Cont(a^-1) = Cont of the empty word = 1.
inline RElement letter_content(Letter l, int n) {
    RElement r = RElement::one(n);
    if (l.gen == Gen::A) {
        if (l.sign > 0) return geometric(n);
        if (n >= 1) r.p[1] = -1;
    } else {
        r.q[0] = l.sign;
    }
    return r;
}

/// Cont(w) assembled coefficientwise: p_k = cont(a^k, w), q_k = cont(a^k b, w).
inline RElement total_content_direct(const Word& w, int n) {
    RElement r(n);
    for (int k = 0; k <= n; ++k) {
        r.p[static_cast<std::size_t>(k)] = content(w, {k, false});
        r.q[static_cast<std::size_t>(k)] = content(w, {k, true});
    }
    return r;
}

/// Cont(w) as the product of the letter images, left to right.
/// Agreement with total_content_direct is the multiplicativity theorem.
inline RElement total_content_hom(const Word& w, int n) {
    RElement r = RElement::one(n);
    for (Letter l : w.letters) r = r * letter_content(l, n);
    return r;
}

/// Closed form for Cont([a, w]) when Cont(w) = 1 + p(x)y:
/// returns 1 + (x/(1-x)) p(x) y, truncated at order n.
inline RElement commutator_content_formula(const std::vector<Int>& p_coeffs, int n) {
    RElement factor = geometric(n) * RElement::x(n); // x/(1-x) truncated
    RElement p(n, p_coeffs, {});
    RElement r = RElement::one(n);
    RElement prod = factor * p;
    r.q = prod.p; // multiply into the y part
    return r;
}

} // namespace subword
