#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace cosmetry {

/// Arbitrary-precision integer used throughout the library.
using Int = mpz_class;

/// Thrown when a documented precondition is violated by the caller.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void require(bool ok, const char* what) {
    if (!ok) throw domain_error(what);
}

inline Int igcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

/// Floor remainder: result lies in [0, m) for m > 0 regardless of sign(a).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline bool fits_long(const Int& v) { return v.fits_slong_p(); }

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace cosmetry
