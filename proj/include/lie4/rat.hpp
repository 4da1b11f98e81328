#ifndef LIE4_RAT_HPP
#define LIE4_RAT_HPP

#include <gmpxx.h>
#include <string>
#include <string_view>

namespace lie4 {

// Exact arbitrary-precision scalars. mpq_class keeps the canonical form
// (gcd(num, den) = 1, den > 0) as long as values are built through the
// arithmetic operators or the helpers below.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) {
    return r.get_str();
}

// Accepts "p", "-p", "p/q"; throws std::invalid_argument on anything else.
Rat rat_from_string(std::string_view s);

} // namespace lie4

#endif
