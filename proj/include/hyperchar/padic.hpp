#pragma once
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hyperchar/rational_util.hpp"
#include "hyperchar/report.hpp"

namespace hyperchar {

// Truncated element of Q_p: the value u * p^v, known modulo p^A.
// The unit u satisfies 0 < u < p^(A-v) and p does not divide u.  A value
// that is indistinguishable from zero at the working precision carries a
// zero flag instead; an exact zero uses the sentinel precision kExactZero.
class PadicScalar {
public:
    static constexpr long kExactZero = 1000000000L;

    static PadicScalar exact_zero(long p);
    static PadicScalar zero_to_precision(long p, long abs_prec);
    static PadicScalar from_int(long p, const Int& x, long abs_prec);
    static PadicScalar from_rat(long p, const Rat& x, long abs_prec);
    // value unit * p^v with p not dividing unit, known mod p^abs_prec
    static PadicScalar from_unit(long p, long v, const Int& unit_part, long abs_prec);

    long prime() const { return p_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && A_ >= kExactZero; }
    // for a zero this returns the precision bound (a lower bound on the valuation)
    long valuation() const { return zero_ ? A_ : v_; }
    long abs_precision() const { return A_; }
    const Int& unit_part() const { return u_; }
    // the value as an integer residue mod p^k; requires v >= 0 and k <= A
    Int residue(long k) const;

    PadicScalar operator-() const;
    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar inverse() const;
    PadicScalar pow(long e) const;

    std::string to_string() const;

private:
    PadicScalar() = default;
    long p_ = 0;
    bool zero_ = true;
    long v_ = 0;
    Int u_ = 0;
    long A_ = 0;
};

// valuation of a-b, using the precision bound when the difference vanishes
long diff_valuation(const PadicScalar& a, const PadicScalar& b);

// Prefix products of the Morita Gamma function: value_at(n) = Gamma_p(n) mod p^m
// for integer n in [0, p^m).  Small moduli keep the full table; large ones keep
// checkpoints every kStride entries and walk the recurrence on demand.
class GammaTable {
public:
    static constexpr long kFullCap = 1L << 21;
    static constexpr long kStride = 4096;

    GammaTable(long p, long m);
    long p() const { return p_; }
    long m() const { return m_; }
    const Int& modulus() const { return pm_; }
    Int value_at(const Int& n) const;

private:
    long p_;
    long m_;
    Int pm_;
    bool full_;
    bool narrow_;                        // modulus fits in 32 bits (uint64 arithmetic)
    std::vector<std::uint64_t> vals_;    // full table or checkpoints, narrow path
    std::vector<Int> wide_vals_;         // same, arbitrary-precision path
};

// process-wide cache, one table per prime at the largest precision seen so far
std::shared_ptr<const GammaTable> gamma_table_for(long p, long m);

// Gamma_p(x) mod p^k at the integer lift n with n = x mod p^k, n in [0, p^k).
// Always a unit.  x must have denominator coprime to p.
PadicScalar padic_gamma(long p, long k, const Rat& x);

// Gamma_p(<x>) as an integer unit mod p^k, from a prefetched table with m() >= k
Int gamma_frac_unit(const GammaTable& tab, long k, const Rat& x);

// Teichmuller lift mod p^m: the unique (p-1)-st root of unity congruent to a
// mod p (zero when p divides a)
Int teichmuller(long p, const Int& a, long m);

// Gamma_p(l/(p-1)) * Gamma_p(<1 - l/(p-1)>) = -omega_bar^l(-1) mod p^k, 0 < l <= p-2
Report gamma_reflection_check(long p, long k, long l);
// both Gauss multiplication formulas for Gamma_p mod p^k, 0 <= l <= p-2, p not dividing t
Report gamma_multiplication_check(long p, long k, long l, long t);
// exact rational floor identity for all 0 < l <= p-2; requires p coprime to d(d-1)
Report floor_identity_check(long p, long d);
// both Gamma-to-character-sum bridge identities mod p^(k-1), 0 <= l <= p-2
Report gamma_bridge_check(long p, long k, long l);

}  // namespace hyperchar
