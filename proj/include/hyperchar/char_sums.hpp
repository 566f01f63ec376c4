#pragma once
#include <memory>
#include <utility>
#include <vector>

#include "hyperchar/characters.hpp"
#include "hyperchar/cyclotomic.hpp"
#include "hyperchar/finite_field.hpp"
#include "hyperchar/report.hpp"

namespace hyperchar {

// Per-field tables of Gauss sums (conductor lcm(q-1, p)) and Greene binomial
// coefficients (conductor q-1), built eagerly so later reads are lock-free.
class CharSumTables {
public:
    explicit CharSumTables(std::shared_ptr<const FieldCtx> ctx);

    const FieldCtx& field() const { return *ctx_; }
    const std::shared_ptr<const FieldCtx>& field_ptr() const { return ctx_; }
    long gauss_conductor() const { return cond_; }
    const CycloNum& gauss(long m) const;          // g(T^m), exponent taken mod q-1
    const CycloNum& binom(long m, long n) const;  // (T^m over T^n), conductor q-1

private:
    std::shared_ptr<const FieldCtx> ctx_;
    long cond_;
    std::vector<CycloNum> gauss_;
    std::vector<std::vector<CycloNum>> binom_;
};

// process-wide cache keyed by (p, e)
std::shared_ptr<const CharSumTables> char_sum_tables(const std::shared_ptr<const FieldCtx>& ctx);

// uncached single-value computations (the cache is cross-checked against these)
CycloNum gauss_sum(const FieldCtx& F, long m);             // conductor lcm(q-1, p)
CycloNum jacobi_sum(const FieldCtx& F, long m, long n);    // conductor q-1
CycloNum greene_binom(const FieldCtx& F, long m, long n);  // conductor q-1

// g(T^m)g(T^-m) = q * T^m(-1) for T^m nontrivial (skip at m = 0)
Report gauss_inverse_check(const std::shared_ptr<const FieldCtx>& ctx, long m);
// theta(alpha) = 1/(q-1) * sum_m g(T^-m) T^m(alpha); alpha must be nonzero
Report theta_expansion_check(const std::shared_ptr<const FieldCtx>& ctx, long alpha);
// J(T^m, T^n) against its Gauss-sum factorization, both branches (skip at m = n = 0)
Report jacobi_decomposition_check(const std::shared_ptr<const FieldCtx>& ctx, long m, long n);
// g(T^m)g(T^-n) = q (T^m over T^n) g(T^{m-n}) T^n(-1) = J(T^m,T^n) g(T^{m-n}),
// valid when T^{m-n} is nontrivial (skip otherwise)
Report binomial_gauss_check(const std::shared_ptr<const FieldCtx>& ctx, long m, long n);
// Davenport-Hasse product relation for chi^m = epsilon twisted by T^psi, plus
// the closed-form evaluation of prod_i g(T^{l + t*i*(q-1)/m}) for t = +-1
Report davenport_hasse_check(const std::shared_ptr<const FieldCtx>& ctx, long m, long psi);
// LHS = g(T^l) g(T^-l phi) / g(phi), RHS = sum_t phi(t(t-1)) T^-l(-t)
std::pair<CycloNum, CycloNum> gauss_bridge(const std::shared_ptr<const FieldCtx>& ctx, long l);
Report gauss_bridge_report(const std::shared_ptr<const FieldCtx>& ctx, long l);
// sum_t phi(t(t-1)) = -1
Report quadratic_sum_check(const std::shared_ptr<const FieldCtx>& ctx);

}  // namespace hyperchar
