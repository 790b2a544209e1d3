#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "subword/contents.hpp"
#include "subword/groupoid.hpp"
#include "subword/integer.hpp"
#include "subword/word.hpp"

namespace subword {

/// The two Kronecker pairings and their sum for one n, plus the lengths of
/// the (unreduced) letter sequences they were evaluated on.
struct PairingReport {
    int n = 0;
    long long t_n_r_n = 0;
    long long t_nm1_r_nm1 = 0;
    long long total = 0;
    std::size_t f_word_length = 0;
    std::size_t g_word_length = 0;

    friend bool operator==(const PairingReport&, const PairingReport&) = default;
};

namespace detail {

inline void require_pairing_n(int n) {
    if (n < 3) throw std::domain_error("pairing requires n >= 3");
}

// The theta/epsilon letter sequences: e_alpha = w_f . d_alpha and
// e_alphabeta = d_alphabeta . w_g, with w_f the iterated commutator word
// (unreduced, length 3*2^(n-2) - 2) and w_g its inverse.
inline std::pair<Word, Word> pairing_words(int n) {
    Word wf = iterated_commutator(n - 2);
    Word wg = invert(wf);
    return {std::move(wf), std::move(wg)};
}

// Cross-checks the closed-form words against the twist-action computation.
// Contents are invariant under free reduction, so either representative
// yields the same pairings; a mismatch would mean the corollary the closed
// form rests on failed, which is a hard internal error.
inline void check_twist_route(int n, const Word& wf, const Word& wg) {
    GroupoidMorphism ea = compute_e_alpha(n);
    GroupoidMorphism eab = compute_e_alphabeta(n);
    if (ea.kind != MorphKind::ToP1 || reduce(wf).word() != ea.w ||
        eab.kind != MorphKind::FromP2 || reduce(wg).word() != eab.w)
        throw std::logic_error("twist action disagrees with the closed-form words");
}

} // namespace detail

/// <t'_n, r'_n> = -cont(a^(n-2) b, w_f).
inline Int pairing_t_n(int n) {
    detail::require_pairing_n(n);
    auto [wf, wg] = detail::pairing_words(n);
    detail::check_twist_route(n, wf, wg);
    return -content(wf, {n - 2, true});
}

/// The two factors of <t'_{n-1}, r'_{n-1}>: cont(a^(n-2), w_f) and the
/// b-exponent sum of w_g. The second vanishes on its own, w_g being a
/// commutator, which is what forces the pairing to zero.
inline std::pair<Int, long> pairing_t_nm1_factors(int n) {
    detail::require_pairing_n(n);
    auto [wf, wg] = detail::pairing_words(n);
    return {content(wf, {n - 2, false}), b_exponent_sum(wg)};
}

inline Int pairing_t_nm1(int n) {
    auto [content_factor, b_factor] = pairing_t_nm1_factors(n);
    return content_factor * b_factor;
}

/// Assembles the full report; runs the groupoid computation as a cross-check.
inline PairingReport full_pairing(int n) {
    detail::require_pairing_n(n);
    auto [wf, wg] = detail::pairing_words(n);
    detail::check_twist_route(n, wf, wg);
    PairingReport r;
    r.n = n;
    r.t_n_r_n = to_int64(-content(wf, {n - 2, true}));
    Int content_factor = content(wf, {n - 2, false});
    r.t_nm1_r_nm1 = to_int64(content_factor * b_exponent_sum(wg));
    r.total = r.t_n_r_n + r.t_nm1_r_nm1;
    r.f_word_length = wf.size();
    r.g_word_length = wg.size();
    return r;
}

/// Pairing on the closed surface: the surface-with-boundary total times the
/// trivial unit factor contributed by the extra handle's curve.
inline Int closed_surface_pairing(int n) {
    return Int(static_cast<long>(full_pairing(n).total)) * 1;
}

} // namespace subword
