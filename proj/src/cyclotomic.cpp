#include "hyperchar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace hyperchar {

namespace {

// exact division of integer polynomials, divisor monic
std::vector<Int> poly_divexact(std::vector<Int> a, const std::vector<Int>& b) {
    std::vector<Int> q(a.size() - b.size() + 1);
    for (long k = static_cast<long>(q.size()) - 1; k >= 0; --k) {
        q[k] = a[k + b.size() - 1];
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
    }
    for (const Int& r : a)
        if (r != 0) throw std::logic_error("poly_divexact: nonzero remainder");
    return q;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
std::vector<Int> cyclotomic_poly(long N, std::map<long, std::vector<Int>>& memo) {
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    std::vector<Int> num(static_cast<size_t>(N) + 1);
    num[0] = -1;
    num[N] = 1;
    std::vector<Int> den{Int(1)};
    for (long d = 1; d < N; ++d)
        if (N % d == 0) den = poly_mul(den, cyclotomic_poly(d, memo));
    auto res = poly_divexact(std::move(num), den);
    memo.emplace(N, res);
    return res;
}

std::mutex g_registry_mutex;
std::map<long, std::shared_ptr<const CycloField>>& registry() {
    static std::map<long, std::shared_ptr<const CycloField>> r;
    return r;
}

}  // namespace

CycloField::CycloField(long N) : N_(N) {
    static std::map<long, std::vector<Int>> phi_memo;
    phi_ = cyclotomic_poly(N, phi_memo);
    deg_ = static_cast<long>(phi_.size()) - 1;
    long table = std::max<long>(N, 2 * deg_ - 1);
    pow_.reserve(static_cast<size_t>(table));
    std::vector<Int> cur(static_cast<size_t>(deg_));
    cur[0] = 1;
    for (long e = 0; e < table; ++e) {
        pow_.push_back(cur);
        // multiply by x and fold the overflow back with x^deg = -phi[0..deg-1]
        Int top = cur[deg_ - 1];
        for (long i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0)
            for (long i = 0; i < deg_; ++i) cur[i] -= top * phi_[i];
    }
}

std::shared_ptr<const CycloField> CycloField::get(long N) {
    if (N < 1) throw std::invalid_argument("CycloField: conductor must be positive");
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto& reg = registry();
    auto it = reg.find(N);
    if (it != reg.end()) return it->second;
    auto f = std::shared_ptr<const CycloField>(new CycloField(N));
    reg.emplace(N, f);
    return f;
}

CycloNum CycloNum::zero(long N) { return CycloNum(CycloField::get(N)); }

CycloNum CycloNum::one(long N) {
    CycloNum r(CycloField::get(N));
    r.c_[0] = 1;
    return r;
}

CycloNum CycloNum::from_rational(long N, const Rat& s) {
    CycloNum r(CycloField::get(N));
    r.c_[0] = s;
    return r;
}

CycloNum CycloNum::zeta_pow(long N, long k) {
    CycloNum r(CycloField::get(N));
    long e = mod_norm(k, N);
    const auto& row = r.field_->power_basis()[static_cast<size_t>(e)];
    for (long i = 0; i < r.field_->degree(); ++i) r.c_[i] = Rat(row[i]);
    return r;
}

CycloNum CycloNum::make(long N, const std::vector<Rat>& coeffs) {
    std::vector<Rat> counts(static_cast<size_t>(N), Rat(0));
    for (size_t e = 0; e < coeffs.size(); ++e) counts[e % static_cast<size_t>(N)] += coeffs[e];
    return from_counts(N, counts);
}

CycloNum CycloNum::from_counts(long N, const std::vector<Rat>& counts) {
    if (counts.size() != static_cast<size_t>(N))
        throw std::invalid_argument("from_counts: counts must have length N");
    CycloNum r(CycloField::get(N));
    const auto& tab = r.field_->power_basis();
    long deg = r.field_->degree();
    for (long e = 0; e < N; ++e) {
        if (counts[e] == 0) continue;
        const auto& row = tab[static_cast<size_t>(e)];
        for (long i = 0; i < deg; ++i)
            if (row[i] != 0) r.c_[i] += counts[e] * Rat(row[i]);
    }
    return r;
}

void CycloNum::require_same_field(const CycloNum& o) const {
    if (field_->conductor() != o.field_->conductor())
        throw std::invalid_argument("CycloNum: conductor mismatch (use embed_into)");
}

bool CycloNum::is_zero() const {
    for (const Rat& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycloNum::is_rational(Rat* out) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    if (out) *out = c_[0];
    return true;
}

CycloNum CycloNum::operator-() const {
    CycloNum r(*this);
    for (Rat& x : r.c_) x = -x;
    return r;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
    require_same_field(o);
    CycloNum r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
    require_same_field(o);
    CycloNum r(*this);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
    require_same_field(o);
    long deg = field_->degree();
    std::vector<Rat> conv(static_cast<size_t>(2 * deg - 1), Rat(0));
    for (long i = 0; i < deg; ++i) {
        if (c_[i] == 0) continue;
        for (long j = 0; j < deg; ++j)
            if (o.c_[j] != 0) conv[i + j] += c_[i] * o.c_[j];
    }
    const auto& tab = field_->power_basis();
    CycloNum r(field_);
    for (long i = 0; i < deg; ++i) r.c_[i] = std::move(conv[i]);
    for (long e = deg; e < 2 * deg - 1; ++e) {
        if (conv[e] == 0) continue;
        const auto& row = tab[static_cast<size_t>(e)];
        for (long i = 0; i < deg; ++i)
            if (row[i] != 0) r.c_[i] += conv[e] * Rat(row[i]);
    }
    return r;
}

CycloNum CycloNum::operator*(const Rat& s) const {
    CycloNum r(*this);
    for (Rat& x : r.c_) x *= s;
    return r;
}

bool CycloNum::operator==(const CycloNum& o) const {
    require_same_field(o);
    return c_ == o.c_;
}

CycloNum CycloNum::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNum::inverse: division by zero");
    // extended Euclid in Q[x] for gcd(this, Phi_N) = 1
    long deg = field_->degree();
    std::vector<Rat> r0(static_cast<size_t>(deg) + 1);
    for (long i = 0; i <= deg; ++i) r0[i] = Rat(field_->phi()[i]);
    std::vector<Rat> r1 = c_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};  // coefficients of `this`
    auto degree_of = [](const std::vector<Rat>& v) { return static_cast<long>(v.size()) - 1; };
    while (degree_of(r1) > 0) {
        // divide r0 by r1
        std::vector<Rat> rem = r0;
        std::vector<Rat> q(static_cast<size_t>(degree_of(r0) - degree_of(r1)) + 1, Rat(0));
        for (long k = degree_of(r0) - degree_of(r1); k >= 0; --k) {
            Rat f = rem[k + degree_of(r1)] / r1.back();
            q[k] = f;
            if (f == 0) continue;
            for (size_t j = 0; j < r1.size(); ++j) rem[k + j] -= f * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s2 = s0 - q*s1
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        }
        while (!s2.empty() && s2.back() == 0) s2.pop_back();
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("CycloNum::inverse: gcd degenerated");
    // r1 is a nonzero constant: this * s1 = r1 mod Phi, so inverse = s1 / r1
    std::vector<Rat> inv(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) inv[i] = s1[i] / r1[0];
    return make(field_->conductor(), inv);
}

CycloNum CycloNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycloNum base(*this), acc = one(field_->conductor());
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycloNum CycloNum::embed_into(long M) const {
    long N = field_->conductor();
    if (M % N != 0) throw std::invalid_argument("embed_into: target conductor not a multiple");
    if (M == N) return *this;
    long step = M / N;
    std::vector<Rat> counts(static_cast<size_t>(M), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) counts[(i * static_cast<size_t>(step)) % static_cast<size_t>(M)] += c_[i];
    return from_counts(M, counts);
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        os << c_[i].get_str();
    }
    os << "] zeta_" << field_->conductor();
    return os.str();
}

}  // namespace hyperchar
