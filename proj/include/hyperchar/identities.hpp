#pragma once
#include <memory>
#include <string>
#include <vector>

#include "hyperchar/finite_field.hpp"
#include "hyperchar/rational_util.hpp"
#include "hyperchar/report.hpp"

namespace hyperchar {

// Symbolic tags, one per theorem-level identity checker.
enum class IdentityId {
    MT1,
    MT2,
    COR_EVEN,
    COR_ODD,
    EXAMPLE_D5,
    EXAMPLE_D4,
    MT6_EVEN,
    MT6_ODD,
    MT6_D6_EXAMPLE,
    MT5_A,
    MT5_B,
    MT5_COR,
    SV1_SUM0,
    SV1_PROD0,
    SV1_EX1,
    SV1_EX2,
    SV2,
    MT4,
    MT4_D3,
    GREENE_SUM,
    POINT_G,
    POINT_F,
};

const char* identity_name(IdentityId id);
// inverse of identity_name, case-insensitive; throws invalid_argument
IdentityId identity_from_name(const std::string& name);
const std::vector<IdentityId>& all_identities();

// Parameter rows of the G-series appearing in the identities, exposed so the
// printed special cases can be pinned against the generic layouts.
std::vector<Rat> g_std_upper(long d);    // h/d, h in [1, d-1]
std::vector<Rat> g_std_lower(long d);    // 0, then h/(d-1), h in [1, d-2]
std::vector<Rat> mt1_inner_lower(long d);  // d odd: h/(d-1) minus the middle slot, then 0, 0
std::vector<Rat> mt2_inner_upper(long d);  // d even: h/d minus the d/2 slot
std::vector<Rat> mt2_inner_lower(long d);  // h/(d-1), h in [1, d-2]
std::vector<Rat> mt6_rhs_upper(long d);    // transformed upper row, branch by parity
std::vector<Rat> mt6_rhs_lower(long d);    // transformed lower row

// Quadratic-twisted G sums against the standard G value; congruences mod
// p^(k-1).  Odd-degree form uses phi(t(t-1)), even-degree form phi(1-t).
Report check_mt1(long p, long d, long x, long k);
Report check_mt2(long p, long d, long x, long k);

// Point-count corollaries: the brute-force projective count N satisfies
// N = 1 - sum (d even) resp. p*N = p - 1 - sum (d odd, plus the sum's
// mod-p consequence), argument alpha*t with alpha = lambda^d (d-1)^(d-1).
Report check_cor_even(long p, long d, long lambda, long k);
Report check_cor_odd(long p, long d, long lambda, long k);

// The printed d=5 and d=4 instances; each first pins the printed parameter
// rows against the generic layouts, then runs the identity.
Report check_example_d5(long p, long x, long k);
Report check_example_d4(long p, long x, long k);

// Argument-inversion transform G_std(d | lambda) = phi(...) G(... | 1/lambda),
// branch picked by the parity of d; the d=6 instance pins the printed rows.
Report check_mt6(long p, long d, long lambda, long k);
Report check_mt6_d6(long p, long lambda, long k);

// Evaluations of 4G4 at -5^5/4^4 and -4^4/5^5 against 2G2 values (p > 7,
// p != 23), and the two summation corollaries derived from them.
Report check_mt5_a(long p, long k);
Report check_mt5_b(long p, long k);
Report check_mt5_cor(long p, long k);

// Special values of 2G2[1/3, 2/3; 0, 1/2 | .]: value 2 when the residues of
// a, b, c are pairwise distinct, 1 when exactly two coincide.  The sum-zero
// family needs a+b+c = 0 and ab+bc+ca != 0, the product-zero family the
// reverse; p >= 5.
Report check_sv1_sum0(long p, long a, long b, long c, long k);
Report check_sv1_prod0(long p, long a, long b, long c, long k);
Report check_sv1_ex1(long p, long k);  // triple (1, 1, -2), argument 1
Report check_sv1_ex2(long p, long k);  // triple (1, 2, -3), argument 343/243
Report check_sv2(long p, long k);      // 3G3[1/4, 1/2, 3/4; 0, 1/3, 2/3 | 1] = 1 + phi(-2)

// Exact F-series summation: sum_t phi(1-t) (d-1)F(d-2)(... | lambda t)
// = (1 - phi(-lambda))/q^((d-1)/2) + q * dF(d-1)(... | lambda), d odd,
// q = 1 mod d(d-1).  The closing factor is q, not q*phi(-1) as printed
// (the printed sign fails for q = 3 mod 4).
Report check_mt4(const std::shared_ptr<const FieldCtx>& ctx, long d, long lambda);
// the two printed d=3 instances at lambda = -1 (plain and chi-twisted)
std::vector<Report> check_mt4_d3(const std::shared_ptr<const FieldCtx>& ctx);

// Sweep grid: parameter ranges plus sampling policy.  Prime powers in qs are
// split into (p, e); identities defined over the prime field only emit skip
// records for e > 1 entries.
struct SweepGrid {
    std::vector<long> qs;
    std::vector<long> ds;
    long k = 5;
    enum class ArgPolicy { all, sample, fixed };
    ArgPolicy policy = ArgPolicy::all;
    long sample_count = 12;        // policy sample: arguments per tuple
    std::vector<long> fixed_args;  // policy fixed: x resp. lambda values
    long triples = 50;             // SV1 families: random triples per prime
    long tuples = 20;              // GREENE_SUM: character tuples per (q, n)
    std::vector<long> ns = {1, 2}; // GREENE_SUM: series depths
    unsigned long seed = 1;
    int threads = 0;               // 0: HYPERCHAR_THREADS, else hardware
};

// Cartesian sweep over the grid, one Report per tuple in deterministic
// order; hypothesis-violating tuples come back as skips, never omissions.
std::vector<Report> sweep(const std::vector<IdentityId>& ids, const SweepGrid& grid);

}  // namespace hyperchar
