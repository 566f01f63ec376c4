#include "hyperchar/greene_f.hpp"

#include <chrono>
#include <stdexcept>

namespace hyperchar {

namespace {

void validate(const GreeneParams& params) {
    if (!params.ctx) throw std::invalid_argument("missing field context");
    if (params.A.size() != params.B.size() + 1)
        throw std::invalid_argument("need one more upper exponent than lower");
}

}  // namespace

CycloNum greene_F(const GreeneParams& params) {
    validate(params);
    const FieldCtx& F = *params.ctx;
    long N = F.q() - 1;
    auto tabs = char_sum_tables(params.ctx);
    CycloNum acc = CycloNum::zero(N);
    if (params.x == 0) return acc;
    long xlog = F.dlog(params.x);
    for (long j = 0; j < N; ++j) {
        CycloNum term = tabs->binom(params.A[0] + j, j);
        for (size_t i = 1; i < params.A.size(); ++i)
            term = term * tabs->binom(params.A[i] + j, params.B[i - 1] + j);
        acc = acc + term * CycloNum::zeta_pow(N, j * xlog);
    }
    return acc * Rat(F.q(), N);
}

Report greene_summation_check(const GreeneParams& params) {
    auto t0 = std::chrono::steady_clock::now();
    validate(params);
    if (params.B.empty()) throw std::invalid_argument("summation reduction needs n >= 1");
    const FieldCtx& F = *params.ctx;
    long N = F.q() - 1;
    Report r;
    r.id = "GREENE_SUM";
    r.set_param("q", std::to_string(F.q()));
    r.set_param("x", std::to_string(params.x));

    CycloNum lhs = greene_F(params);

    GreeneParams inner = params;
    long an = mod_norm(params.A.back(), N);
    long bn = mod_norm(params.B.back(), N);
    inner.A.pop_back();
    inner.B.pop_back();
    CycloNum acc = CycloNum::zero(N);
    for (long y = 1; y < F.q(); ++y) {
        long u = F.sub(1, y);
        if (u == 0) continue;
        inner.x = F.mul(params.x, y);
        long e = mod_norm(an * F.dlog(y) + (bn - an) * F.dlog(u), N);
        acc = acc + greene_F(inner) * CycloNum::zeta_pow(N, e);
    }
    long sign = ((an + bn) * (N / 2)) % N == 0 ? 1 : -1;
    CycloNum rhs = acc * Rat(sign, F.q());

    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.has_exact_zero = true;
    r.exact_zero = lhs == rhs;
    r.status = r.exact_zero ? Report::Status::pass : Report::Status::fail;
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace hyperchar
