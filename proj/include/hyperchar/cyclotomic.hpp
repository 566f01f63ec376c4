#pragma once
#include <memory>
#include <string>
#include <vector>

#include "hyperchar/rational_util.hpp"

namespace hyperchar {

// Shared immutable context for Q(zeta_N) = Q[x]/Phi_N(x).
class CycloField {
  public:
    // Memoized, thread-safe accessor.
    static std::shared_ptr<const CycloField> get(long N);

    long conductor() const { return N_; }
    long degree() const { return deg_; }
    // Phi_N, monic, ascending, length degree+1.
    const std::vector<Int>& phi() const { return phi_; }
    // x^e mod Phi_N for e in [0, table_size); covers e < max(N, 2*degree-1).
    const std::vector<std::vector<Int>>& power_basis() const { return pow_; }

  private:
    explicit CycloField(long N);
    long N_, deg_;
    std::vector<Int> phi_;
    std::vector<std::vector<Int>> pow_;
};

// Element of Q(zeta_N) in the power basis 1, z, ..., z^{deg-1}.
class CycloNum {
  public:
    CycloNum() : field_(CycloField::get(1)), c_(1) {}

    static CycloNum zero(long N);
    static CycloNum one(long N);
    static CycloNum from_rational(long N, const Rat& r);
    // zeta_N^k, any integer k
    static CycloNum zeta_pow(long N, long k);
    // value of the polynomial sum coeffs[i] * zeta_N^i (any length)
    static CycloNum make(long N, const std::vector<Rat>& coeffs);
    // sum over e of counts[e] * zeta_N^e, counts indexed by exponent mod N
    static CycloNum from_counts(long N, const std::vector<Rat>& counts);

    long conductor() const { return field_->conductor(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    // if the element is rational, returns true and sets *out when given
    bool is_rational(Rat* out = nullptr) const;

    CycloNum operator-() const;
    CycloNum operator+(const CycloNum& o) const;
    CycloNum operator-(const CycloNum& o) const;
    CycloNum operator*(const CycloNum& o) const;
    CycloNum operator*(const Rat& s) const;
    CycloNum operator/(const CycloNum& o) const { return *this * o.inverse(); }
    bool operator==(const CycloNum& o) const;
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    // extended gcd against Phi_N; throws domain_error on zero
    CycloNum inverse() const;
    CycloNum pow(long e) const;

    // image in Q(zeta_M) under zeta_N -> zeta_M^{M/N}; requires N | M
    CycloNum embed_into(long M) const;

    // "[c0, c1, ...] zeta_N" coefficient-vector rendering
    std::string to_string() const;

  private:
    explicit CycloNum(std::shared_ptr<const CycloField> f)
        : field_(std::move(f)), c_(static_cast<size_t>(field_->degree()), Rat(0)) {}
    void require_same_field(const CycloNum& o) const;

    std::shared_ptr<const CycloField> field_;
    std::vector<Rat> c_;
};

inline CycloNum operator*(const Rat& s, const CycloNum& x) { return x * s; }

}  // namespace hyperchar
