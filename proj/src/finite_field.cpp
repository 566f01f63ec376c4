#include "hyperchar/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hyperchar {

namespace {

constexpr long kTableCap = 1000000;

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> fs;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// polynomial arithmetic over F_p, coefficients ascending
std::vector<long> pmod_mul(const std::vector<long>& a, const std::vector<long>& b,
                           const std::vector<long>& f, long p) {
    std::vector<long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    long e = static_cast<long>(f.size()) - 1;
    for (long k = static_cast<long>(out.size()) - 1; k >= e; --k) {
        long t = out[k];
        if (!t) continue;
        out[k] = 0;
        for (long j = 0; j < e; ++j) out[k - e + j] = ((out[k - e + j] - t * f[j]) % p + p) % p;
    }
    out.resize(static_cast<size_t>(e));
    return out;
}

std::vector<long> pmod_powx(long exp_p, long reps, const std::vector<long>& f, long p) {
    // x^(p^reps) mod f via repeated squaring of the exponent p each round
    std::vector<long> cur(f.size() - 1, 0);
    if (cur.size() > 1) cur[1] = 1;  // x
    else cur[0] = 0;                 // degree-1 modulus: x reduces to -f[0]
    if (f.size() == 2) cur[0] = ((-f[0]) % p + p) % p;
    for (long r = 0; r < reps; ++r) {
        // cur <- cur^p
        std::vector<long> acc(f.size() - 1, 0);
        acc[0] = 1;
        std::vector<long> base = cur;
        long k = exp_p;
        while (k) {
            if (k & 1) acc = pmod_mul(acc, base, f, p);
            base = pmod_mul(base, base, f, p);
            k >>= 1;
        }
        cur = acc;
    }
    return cur;
}

std::vector<long> pmod_gcd(std::vector<long> a, std::vector<long> b, long p) {
    auto trim = [](std::vector<long>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
    trim(a); trim(b);
    while (!b.empty()) {
        // a mod b
        long inv_lead = 1;
        {   // inverse of b.back() mod p
            long x = b.back() % p, r = 1, e = p - 2;
            long base = x;
            while (e) { if (e & 1) r = r * base % p; base = base * base % p; e >>= 1; }
            inv_lead = r;
        }
        while (a.size() >= b.size()) {
            long f = a.back() * inv_lead % p;
            size_t off = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) a[off + j] = ((a[off + j] - f * b[j]) % p + p) % p;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const std::vector<long>& f, long p) {
    long e = static_cast<long>(f.size()) - 1;
    if (e == 1) return true;
    // Rabin: x^(p^e) = x mod f, and gcd(x^(p^(e/r)) - x, f) = 1 for prime r | e
    auto xe = pmod_powx(p, e, f, p);
    std::vector<long> x(f.size() - 1, 0);
    x[1] = 1;
    if (xe != x) return false;
    for (long r : prime_factors(e)) {
        auto xr = pmod_powx(p, e / r, f, p);
        std::vector<long> diff = xr;
        diff[1] = ((diff[1] - 1) % p + p) % p;
        auto g = pmod_gcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::mutex g_field_mutex;

}  // namespace

FieldCtx::FieldCtx(long p, long e, long forced_generator) : p_(p), e_(e) {
    if (!is_prime(p) || p == 2) throw std::invalid_argument("FieldCtx: p must be an odd prime");
    if (e < 1) throw std::invalid_argument("FieldCtx: e must be positive");
    q_ = 1;
    for (long i = 0; i < e; ++i) {
        q_ *= p;
        if (q_ > kTableCap) throw std::invalid_argument("FieldCtx: q exceeds table cap 10^6");
    }

    // modulus: scan monic degree-e polynomials by the base-p encoding of the
    // low coefficients (x^0 least significant digit)
    if (e == 1) {
        mod_ = {0, 1};
    } else {
        for (long enc = 0;; ++enc) {
            if (enc >= q_) throw std::logic_error("FieldCtx: no irreducible found");
            std::vector<long> f(static_cast<size_t>(e) + 1, 0);
            long v = enc;
            for (long i = 0; i < e; ++i) { f[i] = v % p; v /= p; }
            f[e] = 1;
            if (is_irreducible(f, p)) {
                mod_ = f;
                break;
            }
        }
    }

    // generator: smallest index of order q-1, found via the factorization of q-1
    auto fs = prime_factors(q_ - 1);
    long g = forced_generator > 0 ? forced_generator : 2;
    for (;; ++g) {
        if (g >= q_) throw std::logic_error("FieldCtx: no generator found");
        bool full_order = true;
        for (long r : fs) {
            if (pow(g, (q_ - 1) / r) == 1) { full_order = false; break; }
        }
        if (full_order) break;
        if (forced_generator > 0)
            throw std::invalid_argument("FieldCtx: forced generator does not have order q-1");
    }
    g_ = g;

    exp_.assign(static_cast<size_t>(q_ - 1), 1);
    for (long k = 1; k < q_ - 1; ++k) exp_[k] = mul_slow(exp_[k - 1], g_);
    log_.assign(static_cast<size_t>(q_), -1);
    for (long k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;

    tr_.assign(static_cast<size_t>(e_), 0);
    for (long i = 0; i < e_; ++i) {
        long xi = 1;
        for (long r = 0; r < i; ++r) xi *= p;  // index of basis power x^i
        long acc = 0, cur = xi;
        for (long r = 0; r < e_; ++r) {
            acc = add(acc, cur);
            // cur <- cur^p via slow power (tables may not be ready for mul of acc path)
            long nxt = 1;
            long base = cur, k = p;
            while (k) {
                if (k & 1) nxt = mul_slow(nxt, base);
                base = mul_slow(base, base);
                k >>= 1;
            }
            cur = nxt;
        }
        auto v = to_vec(acc);
        for (long j = 1; j < e_; ++j)
            if (v[j] != 0) throw std::logic_error("FieldCtx: trace not in prime field");
        tr_[i] = v[0];
    }
}

std::shared_ptr<const FieldCtx> FieldCtx::make(long p, long e) {
    static std::map<std::pair<long, long>, std::shared_ptr<const FieldCtx>> cache;
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto key = std::make_pair(p, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto ctx = std::shared_ptr<const FieldCtx>(new FieldCtx(p, e, 0));
    cache.emplace(key, ctx);
    return ctx;
}

std::shared_ptr<const FieldCtx> FieldCtx::make_with_generator(long p, long e, long g) {
    return std::shared_ptr<const FieldCtx>(new FieldCtx(p, e, g));
}

std::vector<long> FieldCtx::to_vec(long idx) const {
    std::vector<long> v(static_cast<size_t>(e_));
    for (long i = 0; i < e_; ++i) { v[i] = idx % p_; idx /= p_; }
    return v;
}

long FieldCtx::from_vec(const std::vector<long>& v) const {
    long idx = 0;
    for (long i = e_ - 1; i >= 0; --i) idx = idx * p_ + v[i];
    return idx;
}

long FieldCtx::mul_slow(long a, long b) const {
    auto va = to_vec(a), vb = to_vec(b);
    std::vector<long> out(static_cast<size_t>(2 * e_ - 1), 0);
    for (long i = 0; i < e_; ++i) {
        if (!va[i]) continue;
        for (long j = 0; j < e_; ++j) out[i + j] = (out[i + j] + va[i] * vb[j]) % p_;
    }
    for (long k = 2 * e_ - 2; k >= e_; --k) {
        long t = out[k];
        if (!t) continue;
        out[k] = 0;
        for (long j = 0; j < e_; ++j) out[k - e_ + j] = ((out[k - e_ + j] - t * mod_[j]) % p_ + p_) % p_;
    }
    out.resize(static_cast<size_t>(e_));
    return from_vec(out);
}

long FieldCtx::add(long a, long b) const {
    long idx = 0, scale = 1;
    for (long i = 0; i < e_; ++i) {
        idx += scale * ((a % p_ + b % p_) % p_);
        a /= p_; b /= p_;
        scale *= p_;
    }
    return idx;
}

long FieldCtx::neg(long a) const {
    long idx = 0, scale = 1;
    for (long i = 0; i < e_; ++i) {
        idx += scale * ((p_ - a % p_) % p_);
        a /= p_;
        scale *= p_;
    }
    return idx;
}

long FieldCtx::sub(long a, long b) const { return add(a, neg(b)); }

long FieldCtx::mul(long a, long b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

long FieldCtx::inv(long a) const {
    if (a == 0) throw std::domain_error("FieldCtx::inv: division by zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

long FieldCtx::pow(long a, long k) const {
    if (a == 0) {
        if (k > 0) return 0;
        if (k == 0) return 1;
        throw std::domain_error("FieldCtx::pow: negative power of zero");
    }
    if (!exp_.empty() && log_[a] >= 0) {
        long e = mod_norm(log_[a] * (k % (q_ - 1)), q_ - 1);
        return exp_[e];
    }
    // construction-time fallback
    long r = 1, base = a;
    long kk = mod_norm(k, q_ - 1);
    while (kk) {
        if (kk & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        kk >>= 1;
    }
    return r;
}

long FieldCtx::dlog(long x) const {
    if (x == 0) throw std::domain_error("FieldCtx::dlog: dlog of zero");
    return log_[x];
}

long FieldCtx::gen_pow(long k) const { return exp_[mod_norm(k, q_ - 1)]; }

long FieldCtx::trace(long x) const {
    long acc = 0;
    for (long i = 0; i < e_; ++i) {
        acc = (acc + (x % p_) * tr_[i]) % p_;
        x /= p_;
    }
    return acc;
}

long FieldCtx::from_int(long c) const { return mod_norm(c, p_); }

long FieldCtx::from_rat(const Rat& r) const {
    Int p(p_);
    Int num = mod_reduce(r.get_num(), p);
    if (mpz_divisible_p(r.get_den_mpz_t(), p.get_mpz_t()))
        throw std::domain_error("FieldCtx::from_rat: denominator divisible by p");
    Int den = mod_inverse(r.get_den(), p);
    return mod_reduce(num * den, p).get_si();
}

}  // namespace hyperchar
