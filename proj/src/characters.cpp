#include "hyperchar/characters.hpp"

#include <chrono>
#include <stdexcept>

namespace hyperchar {

CycloNum char_eval(const FieldCtx& F, long m, long x) {
    long N = F.q() - 1;
    if (x == 0) return CycloNum::zero(N);
    return CycloNum::zeta_pow(N, mod_norm(m, N) * F.dlog(x));
}

CycloNum additive_char(const FieldCtx& F, long x) {
    return CycloNum::zeta_pow(F.p(), F.trace(x));
}

long phi_exponent(const FieldCtx& F) { return (F.q() - 1) / 2; }

int phi_value(const FieldCtx& F, long x) {
    if (x == 0) return 0;
    return (F.dlog(x) * ((F.q() - 1) / 2)) % (F.q() - 1) == 0 ? 1 : -1;
}

PadicScalar teich_realize(long p, long l, long x, long k) {
    long xm = mod_norm(x, p);
    if (xm == 0) throw std::invalid_argument("x must be nonzero mod p");
    Int w = teichmuller(p, Int(xm), k);
    Int pk = pow_int(Int(p), k);
    return PadicScalar::from_unit(p, 0, mod_pow(w, Int(mod_norm(l, p - 1)), pk), k);
}

Report orthogonality_check(const std::shared_ptr<const FieldCtx>& ctx) {
    auto t0 = std::chrono::steady_clock::now();
    const FieldCtx& F = *ctx;
    long q = F.q(), N = q - 1;
    Report r;
    r.id = "ORTHOGONALITY";
    r.set_param("q", std::to_string(q));
    long bad = 0;
    for (long m = 0; m < N; ++m) {
        CycloNum s = CycloNum::zero(N);
        for (long x = 0; x < q; ++x) s = s + char_eval(F, m, x);
        CycloNum want = CycloNum::from_rational(N, m == 0 ? Rat(N) : Rat(0));
        if (s != want) ++bad;
    }
    for (long x = 0; x < q; ++x) {
        CycloNum s = CycloNum::zero(N);
        for (long m = 0; m < N; ++m) s = s + char_eval(F, m, x);
        CycloNum want = CycloNum::from_rational(N, x == 1 ? Rat(N) : Rat(0));
        if (s != want) ++bad;
    }
    r.lhs = std::to_string(bad) + " mismatches over " + std::to_string(N + q) + " sums";
    r.rhs = "0 mismatches";
    r.has_exact_zero = true;
    r.exact_zero = bad == 0;
    r.status = bad == 0 ? Report::Status::pass : Report::Status::fail;
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace hyperchar
