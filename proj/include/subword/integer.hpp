#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace subword {

/// Coefficient and count type. Signed subword counts grow combinatorially
/// (cont(a^k, a^m) = C(m+k-1, k)), so fixed width is not an option.
using Int = mpz_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

/// Narrows to long long, for report fields that are provably small.
inline long long to_int64(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
    return static_cast<long long>(v.get_si());
}

} // namespace subword
