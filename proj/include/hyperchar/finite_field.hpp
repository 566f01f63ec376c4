#pragma once
#include <memory>
#include <vector>

#include "hyperchar/rational_util.hpp"

namespace hyperchar {

// F_{p^e}. Elements are indices sum c_i p^i encoding coefficient vectors
// (c_0..c_{e-1}) against the deterministic modulus; full exp/dlog tables.
class FieldCtx {
  public:
    // Memoized, thread-safe. Modulus: monic irreducible of degree e with the
    // smallest base-p encoding of its low coefficients; generator: smallest
    // element index of multiplicative order q-1. Tables capped at q <= 10^6.
    static std::shared_ptr<const FieldCtx> make(long p, long e);
    // Same field with a caller-chosen generator (diagnostics); validates order.
    static std::shared_ptr<const FieldCtx> make_with_generator(long p, long e, long g);

    long p() const { return p_; }
    long e() const { return e_; }
    long q() const { return q_; }
    const std::vector<long>& modulus() const { return mod_; }  // ascending, monic
    long generator() const { return g_; }

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long inv(long a) const;          // throws domain_error at 0
    long pow(long a, long k) const;  // 0^0 = 1; negative k inverts (a != 0)

    // discrete log base the generator, in [0, q-2]; throws domain_error at 0
    long dlog(long x) const;
    long gen_pow(long k) const;  // generator^k by table

    // absolute trace, a residue in [0, p)
    long trace(long x) const;

    long from_int(long c) const;       // the prime-subfield constant c mod p
    long from_rat(const Rat& r) const; // num/den in the prime subfield

  private:
    FieldCtx(long p, long e, long forced_generator);
    std::vector<long> to_vec(long idx) const;
    long from_vec(const std::vector<long>& v) const;
    long mul_slow(long a, long b) const;

    long p_, e_, q_, g_;
    std::vector<long> mod_;
    std::vector<long> exp_;    // g^k, k in [0, q-2]
    std::vector<long> log_;    // index -> dlog, log_[0] unused
    std::vector<long> tr_;     // trace of basis power x^i, i in [0, e)
};

}  // namespace hyperchar
