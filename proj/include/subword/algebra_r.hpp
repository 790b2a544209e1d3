#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "subword/integer.hpp"

namespace subword {

class not_unipotent_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Element p(x) + q(x)y of the algebra Z<x,y>/(yx, y^2), completed in (x, y)
/// and truncated at x-degree N: p and q hold coefficients of x^0..x^N and
/// x^0 y..x^N y. The defining relations kill yx and y^2, so the product is
///   (p + q y)(p' + q' y) = p p' + (p q' + q p'(0)) y.
struct RElement {
    int trunc_order = 0;      // N >= 1... 0 allowed for degenerate tests
    std::vector<Int> p, q;    // both of size N + 1

    RElement() = default;
    explicit RElement(int n)
        : trunc_order(n),
          p(static_cast<std::size_t>(n) + 1, 0),
          q(static_cast<std::size_t>(n) + 1, 0) {
        if (n < 0) throw std::invalid_argument("truncation order must be nonnegative");
    }
    RElement(int n, std::vector<Int> p_, std::vector<Int> q_)
        : trunc_order(n), p(std::move(p_)), q(std::move(q_)) {
        p.resize(static_cast<std::size_t>(n) + 1, 0);
        q.resize(static_cast<std::size_t>(n) + 1, 0);
    }

    static RElement one(int n) {
        RElement r(n);
        r.p[0] = 1;
        return r;
    }
    static RElement x(int n) {
        RElement r(n);
        if (n >= 1) r.p[1] = 1;
        return r;
    }
    static RElement y(int n) {
        RElement r(n);
        r.q[0] = 1;
        return r;
    }

    bool is_zero() const {
        for (const Int& c : p)
            if (c != 0) return false;
        for (const Int& c : q)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const RElement&, const RElement&) = default;
};

namespace detail {
inline void require_same_order(const RElement& u, const RElement& v) {
    if (u.trunc_order != v.trunc_order)
        throw std::invalid_argument("truncation-order mismatch: " +
                                    std::to_string(u.trunc_order) + " vs " +
                                    std::to_string(v.trunc_order));
}
} // namespace detail

inline RElement operator+(const RElement& u, const RElement& v) {
    detail::require_same_order(u, v);
    RElement r(u.trunc_order);
    for (std::size_t i = 0; i < r.p.size(); ++i) {
        r.p[i] = u.p[i] + v.p[i];
        r.q[i] = u.q[i] + v.q[i];
    }
    return r;
}

inline RElement operator-(const RElement& u, const RElement& v) {
    detail::require_same_order(u, v);
    RElement r(u.trunc_order);
    for (std::size_t i = 0; i < r.p.size(); ++i) {
        r.p[i] = u.p[i] - v.p[i];
        r.q[i] = u.q[i] - v.q[i];
    }
    return r;
}

inline RElement operator*(const RElement& u, const RElement& v) {
    detail::require_same_order(u, v);
    const std::size_t n = u.p.size();
    RElement r(u.trunc_order);
    for (std::size_t i = 0; i < n; ++i) {
        if (u.p[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            r.p[i + j] += u.p[i] * v.p[j];
            r.q[i + j] += u.p[i] * v.q[j]; // p q' contribution to the y part
        }
    }
    // y p' = p'(0) y: the q part sees only the constant term of p'.
    for (std::size_t i = 0; i < n; ++i) r.q[i] += u.q[i] * v.p[0];
    return r;
}

/// Re-truncates to a (typically smaller) order n.
inline RElement truncated(const RElement& u, int n) {
    RElement r(n);
    for (std::size_t i = 0; i < r.p.size() && i < u.p.size(); ++i) {
        r.p[i] = u.p[i];
        r.q[i] = u.q[i];
    }
    return r;
}

/// Two-sided inverse of a unipotent element (p(0) = 1), by triangular
/// back-substitution on the pure-x part: the inverse is p^{-1} - (p^{-1} q) y.
inline RElement inverse_unipotent(const RElement& u) {
    if (u.p.empty() || u.p[0] != 1)
        throw not_unipotent_error("inverse_unipotent: constant term of p must be 1");
    const std::size_t n = u.p.size();
    RElement r(u.trunc_order);
    r.p[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        Int acc = 0;
        for (std::size_t i = 1; i <= m; ++i) acc += u.p[i] * r.p[m - i];
        r.p[m] = -acc;
    }
    for (std::size_t m = 0; m < n; ++m) {
        Int acc = 0;
        for (std::size_t i = 0; i <= m; ++i) acc += r.p[i] * u.q[m - i];
        r.q[m] = -acc;
    }
    return r;
}

/// 1 + x + x^2 + ... + x^N, the truncation of 1/(1-x).
inline RElement geometric(int n) {
    RElement r(n);
    for (Int& c : r.p) c = 1;
    return r;
}

namespace detail {

inline std::string monomial(const Int& coeff, std::size_t deg) {
    Int abs = coeff < 0 ? Int(-coeff) : coeff;
    std::string s;
    if (deg == 0) {
        s = abs.get_str();
    } else {
        if (abs != 1) s = abs.get_str();
        s += "x";
        if (deg > 1) s += "^" + std::to_string(deg);
    }
    return s;
}

inline std::string poly_string(const std::vector<Int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (out.empty())
            out = (v[i] < 0 ? "-" : "") + monomial(v[i], i);
        else
            out += (v[i] < 0 ? " - " : " + ") + monomial(v[i], i);
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

/// Renders e.g. "1 + 2x + x^2 + (3 + x)y".
inline std::string to_string(const RElement& u) {
    bool p_zero = true, q_zero = true;
    std::size_t q_terms = 0;
    for (const Int& c : u.p) p_zero = p_zero && c == 0;
    for (const Int& c : u.q)
        if (c != 0) {
            q_zero = false;
            ++q_terms;
        }
    if (p_zero && q_zero) return "0";

    std::string ys;
    if (!q_zero) {
        if (q_terms == 1 && u.q[0] != 0) {
            // constant coefficient of y
            if (u.q[0] == 1)
                ys = "y";
            else if (u.q[0] == -1)
                ys = "-y";
            else
                ys = u.q[0].get_str() + "y";
        } else {
            ys = "(" + detail::poly_string(u.q) + ")y";
        }
    }
    if (p_zero) return ys;
    std::string ps = detail::poly_string(u.p);
    if (q_zero) return ps;
    if (ys.starts_with('-')) return ps + " - " + ys.substr(1);
    return ps + " + " + ys;
}

} // namespace subword
