#pragma once
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hyperchar {

using Int = mpz_class;
using Rat = mpq_class;

inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// fractional part <x> = x - floor(x), always in [0, 1)
inline Rat frac_part(const Rat& x) {
    Rat f = x - Rat(floor_rat(x));
    f.canonicalize();
    return f;
}

inline Int pow_int(long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// mpq_class(n, d) does not reduce; equality via mpq_equal expects canonical
// form, so every fraction built from runtime numerator and denominator goes
// through here
inline Rat make_rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int mod_reduce(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("mod_inverse: argument not invertible");
    return r;
}

inline Int mod_pow(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// x mod m for rational x with denominator coprime to m
inline Int rat_mod(const Rat& x, const Int& m) {
    Int num = mod_reduce(x.get_num(), m);
    Int den = mod_inverse(x.get_den(), m);
    return mod_reduce(num * den, m);
}

inline std::string rat_str(const Rat& x) {
    return x.get_str();
}

inline long mod_norm(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace hyperchar
