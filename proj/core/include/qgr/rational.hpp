#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qgr {

/// Exact rational scalar. Always stored reduced with positive denominator
/// (mpq_class canonicalizes on construction and after every operation we use).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Canonical text: "n" for integers, "n/d" otherwise.
inline std::string rat_text(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "n" or "n/d"; rejects anything else.
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline double rat_double(const Rat& r) { return r.get_d(); }

/// Integer n with r = n, if r is an integer that fits in long.
inline std::optional<long> rat_long(const Rat& r) {
    if (!is_integer(r) || !r.get_num().fits_slong_p()) return std::nullopt;
    return r.get_num().get_si();
}

}  // namespace qgr
