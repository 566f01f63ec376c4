#include "hyperchar/eisenstein.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "hyperchar/padic.hpp"

namespace hyperchar {

namespace {

long vp_int(const Int& x, long p) {
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), Int(p).get_mpz_t()));
}

}  // namespace

EisensteinElem::EisensteinElem(long p, long cprec) : p_(p), cprec_(cprec) {
    if (p < 3 || cprec < 1) throw std::invalid_argument("bad Eisenstein ring parameters");
    mod_ = pow_int(Int(p), cprec);
    c_.assign(static_cast<size_t>(p - 1), Int(0));
}

EisensteinElem EisensteinElem::from_int(long p, long cprec, const Int& a) {
    EisensteinElem e(p, cprec);
    e.c_[0] = mod_reduce(a, e.mod_);
    return e;
}

EisensteinElem EisensteinElem::pi(long p, long cprec) {
    EisensteinElem e(p, cprec);
    e.c_[1] = 1;
    return e;
}

bool EisensteinElem::is_zero() const {
    for (const Int& x : c_)
        if (x != 0) return false;
    return true;
}

long EisensteinElem::pi_valuation() const {
    long best = kInfinite;
    for (long i = 0; i < p_ - 1; ++i) {
        const Int& x = c_[static_cast<size_t>(i)];
        if (x == 0) continue;
        best = std::min(best, i + (p_ - 1) * vp_int(x, p_));
    }
    return best;
}

void EisensteinElem::require_same_ring(const EisensteinElem& o) const {
    if (p_ != o.p_ || cprec_ != o.cprec_)
        throw std::invalid_argument("Eisenstein ring mismatch");
}

EisensteinElem EisensteinElem::operator-() const {
    EisensteinElem r(p_, cprec_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = mod_reduce(-c_[i], mod_);
    return r;
}

EisensteinElem EisensteinElem::operator+(const EisensteinElem& o) const {
    require_same_ring(o);
    EisensteinElem r(p_, cprec_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = mod_reduce(c_[i] + o.c_[i], mod_);
    return r;
}

EisensteinElem EisensteinElem::operator-(const EisensteinElem& o) const {
    require_same_ring(o);
    EisensteinElem r(p_, cprec_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = mod_reduce(c_[i] - o.c_[i], mod_);
    return r;
}

EisensteinElem EisensteinElem::operator*(const EisensteinElem& o) const {
    require_same_ring(o);
    EisensteinElem r(p_, cprec_);
    size_t n = c_.size();
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (o.c_[j] == 0) continue;
            Int prod = c_[i] * o.c_[j];
            size_t k = i + j;
            if (k >= n) {
                k -= n;  // pi^(p-1) = -p
                prod *= -p_;
            }
            r.c_[k] = mod_reduce(r.c_[k] + prod, mod_);
        }
    }
    return r;
}

EisensteinElem EisensteinElem::scale(const Int& s) const {
    EisensteinElem r(p_, cprec_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = mod_reduce(c_[i] * s, mod_);
    return r;
}

EisensteinElem EisensteinElem::div_pi() const {
    if (!mpz_divisible_ui_p(c_[0].get_mpz_t(), static_cast<unsigned long>(p_)))
        throw std::domain_error("element is not divisible by pi");
    EisensteinElem r(p_, cprec_);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i];
    // c0 / pi = -(c0/p) * pi^(p-2), since p = -pi^(p-1)
    r.c_[c_.size() - 1] = mod_reduce(Int(-(c_[0] / p_)), mod_);
    return r;
}

EisensteinElem EisensteinElem::unit_inverse() const {
    if (mpz_divisible_ui_p(c_[0].get_mpz_t(), static_cast<unsigned long>(p_)))
        throw std::domain_error("not a unit in the Eisenstein ring");
    EisensteinElem z = from_int(p_, cprec_, mod_inverse(mod_reduce(c_[0], Int(p_)), Int(p_)));
    EisensteinElem two = from_int(p_, cprec_, 2);
    long digits = (p_ - 1) * cprec_;
    long iters = 2;
    while ((1L << iters) < digits) ++iters;
    for (long i = 0; i <= iters; ++i) z = z * (two - *this * z);
    return z;
}

std::string EisensteinElem::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i];
    }
    os << "] in powers of pi, coeffs mod " << p_ << "^" << cprec_;
    return os.str();
}

EisensteinElem zeta_p_elem(long p, long cprec, long target_prec) {
    // E(y) = ((1+y)^p - 1)/y has the p-1 roots zeta_p^j - 1; the start y = pi
    // selects the branch with zeta_p - 1 = pi mod pi^2
    std::vector<Int> epoly(static_cast<size_t>(p)), dpoly(static_cast<size_t>(p - 1));
    Int binom = p;  // C(p, 1)
    for (long i = 0; i < p; ++i) {
        epoly[static_cast<size_t>(i)] = binom;  // C(p, i+1)
        if (i + 1 < p) binom = binom * (p - i - 1) / (i + 2);
    }
    for (long i = 0; i + 1 < p; ++i) dpoly[static_cast<size_t>(i)] = epoly[static_cast<size_t>(i + 1)] * (i + 1);

    auto eval = [&](const std::vector<Int>& poly, const EisensteinElem& y) {
        EisensteinElem acc(p, cprec);
        for (size_t i = poly.size(); i-- > 0;)
            acc = acc * y + EisensteinElem::from_int(p, cprec, poly[i]);
        return acc;
    };

    EisensteinElem y = EisensteinElem::pi(p, cprec);
    for (long iter = 0; iter < 64; ++iter) {
        EisensteinElem fy = eval(epoly, y);
        long resid = fy.pi_valuation();
        if (resid - (p - 2) > target_prec) return EisensteinElem::from_int(p, cprec, 1) + y;
        EisensteinElem dy = eval(dpoly, y);
        if (dy.pi_valuation() != p - 2)
            throw std::domain_error("Hensel lift failed to converge (derivative valuation)");
        EisensteinElem unit = dy;
        for (long i = 0; i < p - 2; ++i) unit = unit.div_pi();
        EisensteinElem corr = fy * unit.unit_inverse();
        for (long i = 0; i < p - 2; ++i) corr = corr.div_pi();
        y = y - corr;
        if (eval(epoly, y).pi_valuation() <= resid)
            throw std::domain_error("Hensel lift failed to converge (residual stalled)");
    }
    throw std::domain_error("Hensel lift failed to converge (iteration cap)");
}

Report gross_koblitz_check(long p, long K, long a) {
    auto t0 = std::chrono::steady_clock::now();
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    if (K < 2 * (p - 1)) throw std::invalid_argument("K must be at least 2(p-1)");
    Report r;
    r.id = "GROSS_KOBLITZ";
    r.set_param("p", std::to_string(p));
    r.set_param("x", std::to_string(mod_norm(a, p - 1)));
    r.set_param("k", std::to_string(K));

    // Newton error valuations run 2, 3, 5, ..., 2^s + 1; each step spends one
    // division chain of p-2, forfeiting at most p-2 pi-digits
    long steps = 0;
    while ((1L << steps) + 1 < K + 2) ++steps;
    long cprec = (K + 2 + steps * (p - 2) + (p - 2)) / (p - 1) + 1;

    EisensteinElem zeta = zeta_p_elem(p, cprec, K + 1);
    long ar = mod_norm(a, p - 1);

    std::vector<Int> omega(static_cast<size_t>(p));
    for (long x = 1; x < p; ++x) omega[static_cast<size_t>(x)] = teichmuller(p, Int(x), cprec);
    Int pm = pow_int(Int(p), cprec);

    EisensteinElem g(p, cprec);
    EisensteinElem zpow = EisensteinElem::from_int(p, cprec, 1);
    for (long x = 1; x < p; ++x) {
        zpow = zpow * zeta;  // zeta^x
        Int wbar = mod_pow(omega[static_cast<size_t>(x)], Int((p - 1 - ar) % (p - 1)), pm);
        g = g + zpow.scale(wbar);
    }

    auto tab = gamma_table_for(p, cprec);
    Int gval = gamma_frac_unit(*tab, cprec, make_rat(ar, p - 1));
    EisensteinElem rhs = EisensteinElem::from_int(p, cprec, -gval);
    EisensteinElem piPow = EisensteinElem::pi(p, cprec);
    for (long i = 0; i < ar; ++i) rhs = rhs * piPow;

    EisensteinElem diff = g - rhs;
    long v = diff.pi_valuation();
    r.lhs = g.to_string();
    r.rhs = rhs.to_string();
    r.has_diff_valuation = true;
    r.diff_valuation = v;
    r.status = v >= K ? Report::Status::pass : Report::Status::fail;
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace hyperchar
