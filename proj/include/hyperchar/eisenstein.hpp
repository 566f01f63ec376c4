#pragma once
#include <string>
#include <vector>

#include "hyperchar/rational_util.hpp"
#include "hyperchar/report.hpp"

namespace hyperchar {

// Element of the totally ramified extension Z_p[pi], pi^(p-1) = -p, stored as
// coefficients c_0..c_(p-2) of powers of pi, each mod p^cprec.  One p-digit of
// the affected coefficient is forfeited on every division by p; callers pick
// cprec with enough headroom for their division count.
class EisensteinElem {
public:
    EisensteinElem(long p, long cprec);  // zero
    static EisensteinElem from_int(long p, long cprec, const Int& a);
    static EisensteinElem pi(long p, long cprec);

    long p() const { return p_; }
    long cprec() const { return cprec_; }
    const Int& coeff(long i) const { return c_.at(static_cast<size_t>(i)); }

    bool is_zero() const;
    // exact pi-adic valuation: min over i of i + (p-1)*v_p(c_i); the slot
    // valuations are distinct mod p-1, so no cross-slot cancellation occurs
    long pi_valuation() const;  // returns kInfinite for the zero element
    static constexpr long kInfinite = 1000000000L;

    EisensteinElem operator-() const;
    EisensteinElem operator+(const EisensteinElem& o) const;
    EisensteinElem operator-(const EisensteinElem& o) const;
    EisensteinElem operator*(const EisensteinElem& o) const;
    EisensteinElem scale(const Int& s) const;

    // divide by pi once; requires the constant coefficient divisible by p
    EisensteinElem div_pi() const;
    // multiplicative inverse of a unit (constant coefficient coprime to p)
    EisensteinElem unit_inverse() const;

    std::string to_string() const;

private:
    long p_;
    long cprec_;
    Int mod_;
    std::vector<Int> c_;
    void require_same_ring(const EisensteinElem& o) const;
};

// the root of ((1+y)^p - 1)/y congruent to pi mod pi^2, lifted until the
// residual valuation exceeds target_prec; returns zeta_p = 1 + y
EisensteinElem zeta_p_elem(long p, long cprec, long target_prec);

// native check of g(omega-bar^a) = -pi^((p-1)<a/(p-1)>) Gamma_p(<a/(p-1)>)
// inside Z_p[pi], to pi-adic precision K
Report gross_koblitz_check(long p, long K, long a);

}  // namespace hyperchar
