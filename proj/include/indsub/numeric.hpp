#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace indsub {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    if (k > n) return 0;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline bool is_prime(long p)
{
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// p^t = q with p prime, t >= 1. Returns false for q < 2.
inline bool prime_power(long q, long* p = nullptr, int* t = nullptr)
{
    if (q < 2) return false;
    long base = 2;
    while (q % base) ++base;
    int e = 0;
    long r = q;
    while (r % base == 0) { r /= base; ++e; }
    if (r != 1) return false;
    if (p) *p = base;
    if (t) *t = e;
    return true;
}

inline long ipow(long b, int e)
{
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Residue in [0,p) of an integer-valued rational.
inline long mod_p(const Rational& q, long p)
{
    if (!is_integer(q)) throw PreconditionError("non-integer value " + q.get_str() + " in a mod-p computation");
    Integer r = q.get_num() % p;
    if (r < 0) r += p;
    return r.get_si();
}

inline long mod_p(const Integer& z, long p)
{
    Integer r = z % p;
    if (r < 0) r += p;
    return r.get_si();
}

inline long mod_p(long long v, long p)
{
    long long r = v % p;
    return r < 0 ? long(r + p) : long(r);
}

inline long inverse_mod(long a, long p)
{
    Integer r, aa = mod_p((long long)a, p), pp = p;
    if (!mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t()))
        throw PreconditionError(std::to_string(a) + " has no inverse mod " + std::to_string(p));
    return r.get_si();
}

inline Rational parse_rational(const std::string& s)
{
    Rational q;
    if (q.set_str(s, 10) != 0) throw InputError("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string str(const Rational& q) { return q.get_str(); }
inline std::string str(const Integer& z) { return z.get_str(); }

inline Rational sign(int parity_count) { return (parity_count & 1) ? -1 : 1; }

} // namespace indsub
