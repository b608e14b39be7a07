#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace k3lat {

using Int = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad argument or violated precondition (wrong rank, zero vector, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured enumeration or feasibility bound was exceeded.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Floor division, rounding toward negative infinity.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Non-negative residue of a modulo |m|.
inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int floor(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

/// The rational n/d in lowest terms with a positive denominator.
inline Rational make_rational(const Int& n, const Int& d) {
    if (d == 0) throw DomainError("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

/// Fractional part {q} in [0, 1).
inline Rational frac(const Rational& q) {
    Rational r = q - Rational(floor(q));
    r.canonicalize();
    return r;
}

/// q reduced into [0, m) for a positive integer m.
inline Rational mod_rational(const Rational& q, const Int& m) {
    Rational t = q / Rational(m);
    return frac(t) * Rational(m);
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::int64_t to_i64(const Int& x) {
    if (!x.fits_slong_p()) throw DomainError("integer does not fit in 64 bits: " + x.get_str());
    return x.get_si();
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

/// Integer square root floor(sqrt(x)) for x >= 0.
inline Int isqrt(const Int& x) {
    if (x < 0) throw DomainError("isqrt of negative number");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

} // namespace k3lat
