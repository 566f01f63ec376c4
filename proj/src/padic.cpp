#include "hyperchar/padic.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hyperchar {

namespace {

long vp_int(const Int& x, long p) {
    if (x == 0) throw std::domain_error("valuation of zero");
    Int rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), Int(p).get_mpz_t()));
}

bool is_odd_prime(long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long f = 3; f * f <= p; f += 2)
        if (p % f == 0) return false;
    return true;
}

void require_odd_prime(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("p must be an odd prime");
}

using Clock = std::chrono::steady_clock;

void stamp(Report& r, const Clock::time_point& t0) {
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// valuation of a-b truncated at k (k means congruent to full working precision)
long cong_valuation(const Int& a, const Int& b, long p, long k) {
    Int d = mod_reduce(a - b, pow_int(Int(p), k));
    if (d == 0) return k;
    return vp_int(d, p);
}

// (-p)^e as an exact scalar carried at relative precision rel
PadicScalar neg_p_pow(long p, long e, long rel) {
    Int sign = (e % 2 == 0) ? 1 : -1;
    return PadicScalar::from_unit(p, e, mod_reduce(sign, pow_int(Int(p), rel)), e + rel);
}

int legendre(long p, long x) {
    long r = mod_norm(x, p);
    if (r == 0) return 0;
    Int v = mod_pow(Int(r), Int((p - 1) / 2), Int(p));
    return v == 1 ? 1 : -1;
}

// an integer known only modulo p^m, as a scalar (zero stays a bounded zero)
PadicScalar residue_scalar(long p, const Int& val, long m) {
    Int r = mod_reduce(val, pow_int(Int(p), m));
    if (r == 0) return PadicScalar::zero_to_precision(p, m);
    return PadicScalar::from_int(p, r, m);
}

}  // namespace

// ------------------------------------------------------------ PadicScalar

PadicScalar PadicScalar::exact_zero(long p) { return zero_to_precision(p, kExactZero); }

PadicScalar PadicScalar::zero_to_precision(long p, long abs_prec) {
    PadicScalar s;
    s.p_ = p;
    s.zero_ = true;
    s.A_ = abs_prec;
    return s;
}

PadicScalar PadicScalar::from_unit(long p, long v, const Int& unit_part, long abs_prec) {
    if (abs_prec - v <= 0) return zero_to_precision(p, abs_prec);
    Int u = mod_reduce(unit_part, pow_int(Int(p), abs_prec - v));
    if (u == 0 || mpz_divisible_ui_p(u.get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::invalid_argument("unit part must be coprime to p");
    PadicScalar s;
    s.p_ = p;
    s.zero_ = false;
    s.v_ = v;
    s.u_ = u;
    s.A_ = abs_prec;
    return s;
}

PadicScalar PadicScalar::from_rat(long p, const Rat& x, long abs_prec) {
    if (x == 0) return exact_zero(p);
    Int num = x.get_num(), den = x.get_den();
    long vn = vp_int(num, p), vd = vp_int(den, p);
    long v = vn - vd;
    if (abs_prec - v <= 0) return zero_to_precision(p, abs_prec);
    Int m = pow_int(Int(p), abs_prec - v);
    Int nu, du;
    mpz_divexact(nu.get_mpz_t(), num.get_mpz_t(), pow_int(Int(p), vn).get_mpz_t());
    mpz_divexact(du.get_mpz_t(), den.get_mpz_t(), pow_int(Int(p), vd).get_mpz_t());
    Int u = mod_reduce(mod_reduce(nu, m) * mod_inverse(mod_reduce(du, m), m), m);
    return from_unit(p, v, u, abs_prec);
}

PadicScalar PadicScalar::from_int(long p, const Int& x, long abs_prec) {
    return from_rat(p, Rat(x), abs_prec);
}

Int PadicScalar::residue(long k) const {
    if (zero_) {
        if (k > A_) throw std::invalid_argument("insufficient precision for residue");
        return 0;
    }
    if (v_ < 0) throw std::domain_error("residue of a value with negative valuation");
    if (k > A_) throw std::invalid_argument("insufficient precision for residue");
    return mod_reduce(u_ * pow_int(Int(p_), v_), pow_int(Int(p_), k));
}

PadicScalar PadicScalar::operator-() const {
    if (zero_) return *this;
    return from_unit(p_, v_, -u_, A_);
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("prime mismatch in p-adic arithmetic");
    long A = std::min(A_, o.A_);
    if (zero_ && o.zero_) return zero_to_precision(p_, A);
    long base = std::min(zero_ ? o.v_ : v_, o.zero_ ? v_ : o.v_);
    long M = A - base;
    if (M <= 0) return zero_to_precision(p_, A);
    Int mod = pow_int(Int(p_), M);
    Int s = 0;
    if (!zero_) s += u_ * pow_int(Int(p_), v_ - base);
    if (!o.zero_) s += o.u_ * pow_int(Int(p_), o.v_ - base);
    s = mod_reduce(s, mod);
    if (s == 0) return zero_to_precision(p_, A);
    long t = vp_int(s, p_);
    Int u;
    mpz_divexact(u.get_mpz_t(), s.get_mpz_t(), pow_int(Int(p_), t).get_mpz_t());
    return from_unit(p_, base + t, u, A);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    if (p_ != o.p_) throw std::invalid_argument("prime mismatch in p-adic arithmetic");
    if (is_exact_zero() || o.is_exact_zero()) return exact_zero(p_);
    if (zero_ && o.zero_) return zero_to_precision(p_, A_ + o.A_);
    if (zero_) return zero_to_precision(p_, A_ + o.v_);
    if (o.zero_) return zero_to_precision(p_, o.A_ + v_);
    long r = std::min(A_ - v_, o.A_ - o.v_);
    long v = v_ + o.v_;
    Int u = mod_reduce(u_ * o.u_, pow_int(Int(p_), r));
    return from_unit(p_, v, u, v + r);
}

PadicScalar PadicScalar::inverse() const {
    if (zero_) throw std::domain_error("inverse of a p-adic zero");
    long r = A_ - v_;
    Int m = pow_int(Int(p_), r);
    return from_unit(p_, -v_, mod_inverse(u_, m), -v_ + r);
}

PadicScalar PadicScalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) {
        if (zero_) throw std::domain_error("0^0 is undefined");
        return from_unit(p_, 0, 1, A_ - v_);
    }
    PadicScalar acc = *this;
    for (long i = 1; i < e; ++i) acc = acc * (*this);
    return acc;
}

std::string PadicScalar::to_string() const {
    std::ostringstream os;
    if (is_exact_zero()) return "0";
    if (zero_) {
        os << "O(" << p_ << "^" << A_ << ")";
        return os.str();
    }
    if (v_ != 0) os << p_ << "^" << v_ << " * ";
    os << u_ << " mod " << p_ << "^" << A_;
    if (v_ >= 0 && A_ >= 1) {
        Int pa = pow_int(Int(p_), A_);
        Int r = mod_reduce(u_ * pow_int(Int(p_), v_), pa);
        Int b = (2 * r > pa) ? Int(r - pa) : r;
        if (2 * abs(b) <= pow_int(Int(p_), A_ - 1)) os << " (= " << b << ")";
    }
    return os.str();
}

long diff_valuation(const PadicScalar& a, const PadicScalar& b) {
    return (a - b).valuation();
}

// ------------------------------------------------------------ Gamma tables

GammaTable::GammaTable(long p, long m) : p_(p), m_(m) {
    require_odd_prime(p);
    if (m < 1) throw std::invalid_argument("precision must be positive");
    pm_ = pow_int(Int(p), m);
    if (pm_ > (Int(1) << 40)) throw std::domain_error("gamma table modulus too large");
    full_ = pm_ <= kFullCap;
    narrow_ = pm_ < (Int(1) << 32);
    if (narrow_) {
        std::uint64_t M = pm_.get_ui();
        std::uint64_t N = M;
        if (full_)
            vals_.reserve(N);
        else
            vals_.reserve(static_cast<size_t>(N / kStride + 2));
        std::uint64_t g = 1 % M;
        for (std::uint64_t n = 0; n < N; ++n) {
            if (full_ || n % kStride == 0) vals_.push_back(g);
            std::uint64_t f = (n % static_cast<std::uint64_t>(p) == 0) ? 1 : n;
            g = g * (M - f % M) % M;
        }
    } else {
        Int g = 1;
        for (Int n = 0; n < pm_; ++n) {
            if (mpz_divisible_ui_p(n.get_mpz_t(), kStride)) wide_vals_.push_back(g);
            Int f = mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p)) ? Int(1) : n;
            g = mod_reduce(g * -f, pm_);
        }
    }
}

Int GammaTable::value_at(const Int& n) const {
    if (n < 0 || n >= pm_) throw std::invalid_argument("gamma table index out of range");
    if (narrow_) {
        std::uint64_t M = pm_.get_ui();
        std::uint64_t idx = n.get_ui();
        if (full_) return Int(static_cast<unsigned long>(vals_[idx]));
        std::uint64_t c = idx / kStride;
        std::uint64_t g = vals_[c];
        for (std::uint64_t j = c * kStride; j < idx; ++j) {
            std::uint64_t f = (j % static_cast<std::uint64_t>(p_) == 0) ? 1 : j;
            g = g * (M - f % M) % M;
        }
        return Int(static_cast<unsigned long>(g));
    }
    Int c = n / kStride;
    if (!c.fits_ulong_p()) throw std::domain_error("gamma table index too large");
    Int g = wide_vals_.at(c.get_ui());
    for (Int j = c * kStride; j < n; ++j) {
        Int f = mpz_divisible_ui_p(j.get_mpz_t(), static_cast<unsigned long>(p_)) ? Int(1) : j;
        g = mod_reduce(g * -f, pm_);
    }
    return g;
}

std::shared_ptr<const GammaTable> gamma_table_for(long p, long m) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const GammaTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end() && it->second->m() >= m) return it->second;
    auto tab = std::make_shared<const GammaTable>(p, m);
    cache[p] = tab;
    return tab;
}

PadicScalar padic_gamma(long p, long k, const Rat& x) {
    require_odd_prime(p);
    if (k < 1) throw std::invalid_argument("precision must be positive");
    if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), static_cast<unsigned long>(p)))
        throw std::invalid_argument("argument denominator must be coprime to p");
    auto tab = gamma_table_for(p, k);
    Int pk = pow_int(Int(p), k);
    Int lift = rat_mod(x, pk);
    return PadicScalar::from_unit(p, 0, mod_reduce(tab->value_at(lift), pk), k);
}

Int gamma_frac_unit(const GammaTable& tab, long k, const Rat& x) {
    if (tab.m() < k) throw std::logic_error("gamma table precision too small");
    Int pk = pow_int(Int(tab.p()), k);
    return mod_reduce(tab.value_at(rat_mod(frac_part(x), pk)), pk);
}

Int teichmuller(long p, const Int& a, long m) {
    require_odd_prime(p);
    if (m < 1) throw std::invalid_argument("precision must be positive");
    Int M = pow_int(Int(p), m);
    Int x = mod_reduce(a, M);
    if (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) return 0;
    for (long i = 0; i <= m; ++i) x = mod_pow(x, Int(p), M);
    if (mod_pow(x, Int(p), M) != x) throw std::logic_error("teichmuller iteration did not stabilize");
    return x;
}

// ------------------------------------------------------------ lemma checks

Report gamma_reflection_check(long p, long k, long l) {
    auto t0 = Clock::now();
    require_odd_prime(p);
    if (k < 1) throw std::invalid_argument("precision must be positive");
    if (l <= 0 || l > p - 2) throw std::invalid_argument("l must lie in (0, p-2]");
    Report r;
    r.id = "GAMMA_REFLECTION";
    r.set_param("p", std::to_string(p));
    r.set_param("k", std::to_string(k));
    r.set_param("l", std::to_string(l));
    auto tab = gamma_table_for(p, k);
    Int pk = pow_int(Int(p), k);
    Int lhs = mod_reduce(gamma_frac_unit(*tab, k, make_rat(l, p - 1)) *
                             gamma_frac_unit(*tab, k, make_rat(p - 1 - l, p - 1)),
                         pk);
    Int rhs = mod_reduce(Int(l % 2 == 0 ? -1 : 1), pk);
    long v = cong_valuation(lhs, rhs, p, k);
    r.lhs = PadicScalar::from_unit(p, 0, lhs, k).to_string();
    r.rhs = PadicScalar::from_unit(p, 0, rhs, k).to_string();
    r.has_diff_valuation = true;
    r.diff_valuation = v;
    r.status = v >= k - 1 ? Report::Status::pass : Report::Status::fail;
    stamp(r, t0);
    return r;
}

Report gamma_multiplication_check(long p, long k, long l, long t) {
    auto t0 = Clock::now();
    require_odd_prime(p);
    if (k < 1) throw std::invalid_argument("precision must be positive");
    if (l < 0 || l > p - 2) throw std::invalid_argument("l must lie in [0, p-2]");
    if (t < 1) throw std::invalid_argument("t must be a positive integer");
    if (t % p == 0) throw std::invalid_argument("t must be coprime to p");
    Report r;
    r.id = "GAMMA_MULTIPLICATION";
    r.set_param("p", std::to_string(p));
    r.set_param("k", std::to_string(k));
    r.set_param("l", std::to_string(l));
    r.set_param("t", std::to_string(t));
    auto tab = gamma_table_for(p, k);
    Int pk = pow_int(Int(p), k);
    Int w = teichmuller(p, Int(t), k);
    Int mid = 1;  // the product of Gamma_p(h/t) shared by both left-hand sides
    for (long h = 1; h < t; ++h) mid = mod_reduce(mid * gamma_frac_unit(*tab, k, make_rat(h, t)), pk);

    Int lhs1 = mod_reduce(mod_pow(w, Int(mod_norm(t * l, p - 1)), pk) *
                              gamma_frac_unit(*tab, k, make_rat(t * l, p - 1)) * mid,
                          pk);
    Int rhs1 = 1;
    for (long h = 0; h < t; ++h)
        rhs1 = mod_reduce(rhs1 * gamma_frac_unit(*tab, k, make_rat(h, t) + make_rat(l, p - 1)), pk);

    Int lhs2 = mod_reduce(mod_pow(w, Int(mod_norm(-t * l, p - 1)), pk) *
                              gamma_frac_unit(*tab, k, make_rat(-t * l, p - 1)) * mid,
                          pk);
    Int rhs2 = 1;
    for (long h = 0; h < t; ++h)
        rhs2 = mod_reduce(rhs2 * gamma_frac_unit(*tab, k, make_rat(1 + h, t) - make_rat(l, p - 1)), pk);

    long v = std::min(cong_valuation(lhs1, rhs1, p, k), cong_valuation(lhs2, rhs2, p, k));
    r.lhs = PadicScalar::from_unit(p, 0, lhs1, k).to_string() + " ; " +
            PadicScalar::from_unit(p, 0, lhs2, k).to_string();
    r.rhs = PadicScalar::from_unit(p, 0, rhs1, k).to_string() + " ; " +
            PadicScalar::from_unit(p, 0, rhs2, k).to_string();
    r.has_diff_valuation = true;
    r.diff_valuation = v;
    r.status = v >= k - 1 ? Report::Status::pass : Report::Status::fail;
    stamp(r, t0);
    return r;
}

Report floor_identity_check(long p, long d) {
    auto t0 = Clock::now();
    require_odd_prime(p);
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    if (d % p == 0 || (d - 1) % p == 0)
        throw std::invalid_argument("p must not divide d(d-1)");
    Report r;
    r.id = "FLOOR_IDENTITY";
    r.set_param("p", std::to_string(p));
    r.set_param("d", std::to_string(d));
    long mismatches = 0;
    for (long l = 1; l <= p - 2; ++l) {
        Rat u = make_rat(l, p - 1);
        Rat lhs = u + frac_part(make_rat((d - 1) * l, p - 1)) + frac_part(make_rat(-d * l, p - 1));
        Int rhs = 1;
        for (long h = 1; h <= d - 1; ++h) rhs -= floor_rat(make_rat(h, d) - u);
        for (long h = 1; h <= d - 2; ++h) rhs -= floor_rat(make_rat(h, d - 1) + u);
        if (lhs != Rat(rhs)) ++mismatches;
    }
    r.lhs = std::to_string(mismatches) + " mismatches over l in [1, " + std::to_string(p - 2) + "]";
    r.rhs = "0 mismatches";
    r.has_exact_zero = true;
    r.exact_zero = mismatches == 0;
    r.status = mismatches == 0 ? Report::Status::pass : Report::Status::fail;
    stamp(r, t0);
    return r;
}

Report gamma_bridge_check(long p, long k, long l) {
    auto t0 = Clock::now();
    require_odd_prime(p);
    if (k < 2) throw std::invalid_argument("precision must be at least 2");
    if (l < 0 || l > p - 2) throw std::invalid_argument("l must lie in [0, p-2]");
    Report r;
    r.id = "GAMMA_BRIDGE";
    r.set_param("p", std::to_string(p));
    r.set_param("k", std::to_string(k));
    r.set_param("l", std::to_string(l));
    long m = k + 1;
    auto tab = gamma_table_for(p, m);
    Int pm = pow_int(Int(p), m);
    std::vector<Int> omega(p);
    for (long x = 1; x < p; ++x) omega[x] = teichmuller(p, Int(x), m);
    Int ghalf_inv = mod_inverse(gamma_frac_unit(*tab, m, Rat(1, 2)), pm);

    // second bridge: holds for every l in [0, p-2], RHS uses omega^l(-t)
    long e7 = static_cast<long>(floor_rat(Rat(1, 2) - make_rat(l, p - 1)).get_si());
    Int u7 = mod_reduce(gamma_frac_unit(*tab, m, make_rat(l, p - 1)) *
                            gamma_frac_unit(*tab, m, Rat(1, 2) - make_rat(l, p - 1)) * ghalf_inv,
                        pm);
    PadicScalar lhs7 = PadicScalar::from_unit(p, 0, u7, m) * neg_p_pow(p, -e7, m);
    Int s7 = 0;
    for (long t = 2; t < p; ++t) {
        int sgn = legendre(p, t * (t - 1));
        if (sgn == 0) continue;
        Int term = mod_pow(omega[p - t], Int(mod_norm(l, p - 1)), pm);
        s7 += sgn > 0 ? term : Int(-term);
    }
    PadicScalar rhs7 = residue_scalar(p, -s7, m);
    long v7 = diff_valuation(lhs7, rhs7);
    bool ok = v7 >= k - 1;

    // first bridge: requires l >= 1, RHS uses omega-bar^l(-t) and a 1/p factor
    std::string lhs_str, rhs_str;
    if (l >= 1) {
        long e3 = static_cast<long>(floor_rat(Rat(1, 2) + make_rat(l, p - 1)).get_si());
        Int u3 = mod_reduce(gamma_frac_unit(*tab, m, make_rat(p - 1 - l, p - 1)) *
                                gamma_frac_unit(*tab, m, Rat(1, 2) + make_rat(l, p - 1)) * ghalf_inv,
                            pm);
        PadicScalar lhs3 = PadicScalar::from_unit(p, 0, u3, m) * neg_p_pow(p, -e3, m);
        Int s3 = 0;
        for (long t = 2; t < p; ++t) {
            int sgn = legendre(p, t * (t - 1));
            if (sgn == 0) continue;
            Int term = mod_pow(omega[p - t], Int(mod_norm(p - 1 - l, p - 1)), pm);
            s3 += sgn > 0 ? term : Int(-term);
        }
        PadicScalar rhs3 = residue_scalar(p, s3, m) * PadicScalar::from_unit(p, -1, 1, m);
        long v3 = diff_valuation(lhs3, rhs3);
        ok = ok && v3 >= k - 1;
        r.has_diff_valuation = true;
        r.diff_valuation = std::min(v7, v3);
        lhs_str = lhs3.to_string() + " ; " + lhs7.to_string();
        rhs_str = rhs3.to_string() + " ; " + rhs7.to_string();
    } else {
        r.has_diff_valuation = true;
        r.diff_valuation = v7;
        lhs_str = lhs7.to_string();
        rhs_str = rhs7.to_string();
    }
    r.lhs = lhs_str;
    r.rhs = rhs_str;
    r.status = ok ? Report::Status::pass : Report::Status::fail;
    stamp(r, t0);
    return r;
}

}  // namespace hyperchar
