#include "hyperchar/mccarthy_g.hpp"

#include <stdexcept>

namespace hyperchar {

PadicScalar g_function(const GParams& params) {
    long p = params.p, k = params.k;
    size_t n = params.a.size();
    if (params.b.size() != n || n == 0)
        throw std::invalid_argument("parameter lists must be nonempty and equal length");
    if (k < 1) throw std::invalid_argument("precision must be positive");
    for (const Rat& x : params.a)
        if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
            throw std::invalid_argument("upper parameter denominator divisible by p");
    for (const Rat& x : params.b)
        if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
            throw std::invalid_argument("lower parameter denominator divisible by p");
    if (mod_norm(params.t, p) == 0) return PadicScalar::zero_to_precision(p, k);

    std::vector<Rat> af(n), nbf(n);
    for (size_t i = 0; i < n; ++i) {
        af[i] = frac_part(params.a[i]);
        nbf[i] = frac_part(-params.b[i]);
    }

    // scan the (-p)-exponents first so the working modulus can absorb the most
    // negative one
    std::vector<long> ej(static_cast<size_t>(p - 1), 0);
    long min_e = 0;
    for (long j = 0; j < p - 1; ++j) {
        Rat u = make_rat(j, p - 1);
        long e = 0;
        for (size_t i = 0; i < n; ++i) {
            e -= static_cast<long>(floor_rat(af[i] - u).get_si());
            e -= static_cast<long>(floor_rat(nbf[i] + u).get_si());
        }
        ej[static_cast<size_t>(j)] = e;
        min_e = std::min(min_e, e);
    }
    long shift = -min_e;  // min_e <= 0 because e_0 = 0
    long m = k + shift;

    auto tab = gamma_table_for(p, m);
    Int M = pow_int(Int(p), m);
    std::vector<Int> dens_inv(n), denb_inv(n);
    for (size_t i = 0; i < n; ++i) {
        dens_inv[i] = mod_inverse(gamma_frac_unit(*tab, m, af[i]), M);
        denb_inv[i] = mod_inverse(gamma_frac_unit(*tab, m, nbf[i]), M);
    }
    Int w = teichmuller(p, Int(mod_norm(params.t, p)), m);
    Int mp = mod_reduce(Int(-p), M);

    Int acc = 0;
    for (long j = 0; j < p - 1; ++j) {
        Rat u = make_rat(j, p - 1);
        Int term = (static_cast<unsigned long>(j) * n) % 2 == 0 ? Int(1) : Int(-1);
        if (j != 0) term *= mod_pow(w, Int((p - 1 - j) % (p - 1)), M);
        for (size_t i = 0; i < n; ++i) {
            term = mod_reduce(term * gamma_frac_unit(*tab, m, af[i] - u) * dens_inv[i], M);
            term = mod_reduce(term * gamma_frac_unit(*tab, m, nbf[i] + u) * denb_inv[i], M);
        }
        term = mod_reduce(term * mod_pow(mp, Int(ej[static_cast<size_t>(j)] + shift), M), M);
        acc = mod_reduce(acc + term, M);
    }
    acc = mod_reduce(-acc * mod_inverse(Int(p - 1), M), M);
    // the scan scaled each term by (-p)^shift; dividing by p^shift below
    // leaves a stray (-1)^shift
    if (shift % 2 != 0) acc = mod_reduce(-acc, M);

    // value = acc / p^shift, known mod p^k
    if (acc == 0) return PadicScalar::zero_to_precision(p, k);
    Int rest;
    long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), acc.get_mpz_t(), Int(p).get_mpz_t()));
    return PadicScalar::from_unit(p, v - shift, rest, k);
}

}  // namespace hyperchar
