#!/usr/bin/env python3
"""Independent oracle for the C++ library.

Recomputes the small cases in plain Python (no third-party deps) and emits
tests/frozen_values.hpp. Every identity this script can check internally is
asserted here, so a bad formula fails at generation time, not in C++.
Run from the repo root:  python3 tests/oracles/gen_frozen_values.py > tests/frozen_values.hpp
"""

from fractions import Fraction
import sys

# ---------------------------------------------------------------- polynomials

def poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out

def poly_divexact(a, b):
    # exact division of integer polynomials, b monic-leading
    a = a[:]
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + len(b) - 1]
        assert c % b[-1] == 0
        q[k] = c // b[-1]
        for j, y in enumerate(b):
            a[k + j] -= q[k] * y
    assert all(v == 0 for v in a)
    return q

_cyclo_cache = {}

def cyclotomic(n):
    if n in _cyclo_cache:
        return _cyclo_cache[n]
    num = [0] * n + [1]
    num[0] = -1                       # x^n - 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = poly_mul(den, cyclotomic(d))
    res = poly_divexact(num, den)
    _cyclo_cache[n] = res
    return res

def euler_phi(n):
    c = 0
    for k in range(1, n + 1):
        from math import gcd
        if gcd(k, n) == 1:
            c += 1
    return c

# ------------------------------------------------------- cyclotomic elements
# element of Q(zeta_N) as list of Fractions, length phi(N), basis 1..x^{deg-1}

def cy_zero2(N):
    return [Fraction(0)] * (len(cyclotomic(N)) - 1)

def cy_reduce(N, coeffs):
    phi = cyclotomic(N)
    deg = len(phi) - 1
    c = [Fraction(x) for x in coeffs]
    for k in range(len(c) - 1, deg - 1, -1):
        t = c[k]
        if t:
            c[k] = Fraction(0)
            for j in range(deg):
                c[k - deg + j] -= t * phi[j]
    c = c[:max(deg, 1)]
    while len(c) < deg:
        c.append(Fraction(0))
    return c[:deg]

def cy_zeta(N, e):
    e %= N
    v = [Fraction(0)] * (e + 1)
    v[e] = Fraction(1)
    return cy_reduce(N, v)

def cy_add(a, b):
    return [x + y for x, y in zip(a, b)]

def cy_scale(a, s):
    return [x * s for x in a]

def cy_mul(N, a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return cy_reduce(N, out)

def cy_from_counts(N, counts):
    # sum of counts[e] * zeta_N^e
    acc = [Fraction(0)] * N
    for e, c in enumerate(counts):
        acc[e % N] += Fraction(c)
    return cy_reduce(N, acc)

def cy_is_zero(a):
    return all(x == 0 for x in a)

def cy_rat(N, r):
    v = cy_zero2(N)
    v[0] = Fraction(r)
    return v

# ------------------------------------------------------------- finite fields

class Fq:
    """F_{p^e}, elements encoded as indices sum c_i p^i.

    Modulus: monic irreducible of degree e minimizing the base-p integer
    encoding of its low coefficients. Generator: smallest index of order q-1.
    """

    def __init__(self, p, e):
        self.p, self.e = p, e
        self.q = p ** e
        self.mod = self._find_modulus()
        self._build_tables()

    def _vec(self, idx):
        v = []
        for _ in range(self.e):
            v.append(idx % self.p)
            idx //= self.p
        return v

    def _idx(self, vec):
        i = 0
        for c in reversed(vec):
            i = i * self.p + c
        return i

    def _irreducible(self, low):
        # low: coeffs c_0..c_{e-1}; poly = x^e + sum c_i x^i; test by brute root/factor
        p, e = self.p, self.e
        if e == 1:
            return True
        full = low + [1]
        # degree 2 or 3: irreducible iff no roots; handle general e by trial division
        def peval(poly, x):
            acc = 0
            for c in reversed(poly):
                acc = (acc * x + c) % p
            return acc
        if any(peval(full, x) == 0 for x in range(p)):
            return False
        if e <= 3:
            return True
        raise NotImplementedError

    def _find_modulus(self):
        if self.e == 1:
            return [0, 1]
        for enc in range(self.q):
            low = self._vec(enc)
            if self._irreducible(low):
                return low + [1]
        raise RuntimeError

    def _mul_vec(self, a, b):
        p, e = self.p, self.e
        out = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
        for k in range(len(out) - 1, e - 1, -1):
            t = out[k]
            if t:
                out[k] = 0
                for j in range(e):
                    out[k - e + j] = (out[k - e + j] - t * self.mod[j]) % p
        return out[:e]

    def mul(self, a, b):
        return self._idx(self._mul_vec(self._vec(a), self._vec(b)))

    def add(self, a, b):
        va, vb = self._vec(a), self._vec(b)
        return self._idx([(x + y) % self.p for x, y in zip(va, vb)])

    def neg(self, a):
        return self._idx([(-x) % self.p for x in self._vec(a)])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def pow(self, a, k):
        r, base = 1, a
        while k:
            if k & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            k >>= 1
        return r

    def _order(self, a):
        seen, x, n = 1, a, 1
        while x != 1:
            x = self.mul(x, a)
            n += 1
            if n > self.q:
                raise RuntimeError
        return n

    def _build_tables(self):
        g = None
        for cand in range(2, self.q):
            if self._order(cand) == self.q - 1:
                g = cand
                break
        self.g = g
        self.exp = [1] * (self.q - 1)
        for k in range(1, self.q - 1):
            self.exp[k] = self.mul(self.exp[k - 1], g)
        self.log = {}
        for k, v in enumerate(self.exp):
            self.log[v] = k

    def dlog(self, a):
        return self.log[a]

    def inv(self, a):
        return self.exp[(-(self.dlog(a))) % (self.q - 1)]

    def trace(self, a):
        # sum of Frobenius images, lands in prime field
        acc = 0
        x = a
        for _ in range(self.e):
            acc = self.add(acc, x)
            x = self.pow(x, self.p)
        v = self._vec(acc)
        assert all(c == 0 for c in v[1:])
        return v[0]

# ------------------------------------------------------------ character sums

def char_val(F, m, x, N=None):
    # T^m(x) as element of Q(zeta_N), N defaults to q-1; 0 at x=0
    if N is None:
        N = F.q - 1
    if x == 0:
        return cy_zero2(N)
    step = N // (F.q - 1)
    return cy_zeta(N, step * m * F.dlog(x))

def gauss_sum(F, m, N):
    # sum_x T^m(x) theta(x) at conductor N = lcm(q-1, p)
    counts = [Fraction(0)] * N
    for x in range(1, F.q):
        e = (N // (F.q - 1)) * m * F.dlog(x) + (N // F.p) * F.trace(x)
        counts[e % N] += 1
    return cy_from_counts(N, counts)

def jacobi_sum(F, m1, m2):
    N = F.q - 1
    acc = cy_zero2(N)
    for t in range(F.q):
        u = F.sub(1, t)
        if t == 0 or u == 0:
            # char of 0 is 0 unless exponent makes trivial char: chi(0)=0 always here
            if (t == 0 and m1 % N == 0) or (u == 0 and m2 % N == 0):
                pass  # epsilon(0) = 0 as well; nothing to add
            continue
        acc = cy_add(acc, cy_zeta(N, m1 * F.dlog(t) + m2 * F.dlog(u)))
    return acc

def jacobi_full(F, m1, m2):
    # J with the chi(0)=0 convention including epsilon(0)=0: plain double loop
    N = F.q - 1
    acc = cy_zero2(N)
    for t in range(F.q):
        u = F.sub(1, t)
        if t == 0 or u == 0:
            continue
        acc = cy_add(acc, cy_zeta(N, m1 * F.dlog(t) + m2 * F.dlog(u)))
    return acc

def greene_binom(F, m, n):
    # binom(T^m, T^n) = T^n(-1)/q * sum_x T^m(x) T^{-n}(1-x)
    N = F.q - 1
    neg1 = F.neg(1)
    acc = cy_zero2(N)
    for x in range(F.q):
        u = F.sub(1, x)
        if x == 0 or u == 0:
            continue
        acc = cy_add(acc, cy_zeta(N, m * F.dlog(x) - n * F.dlog(u)))
    sign = cy_zeta(N, n * F.dlog(neg1))
    return cy_scale(cy_mul(N, sign, acc), Fraction(1, F.q))

def greene_F(F, A, B, x):
    # A = [a0..an], B = [b1..bn] character exponents; result in Q(zeta_{q-1})
    N = F.q - 1
    if x == 0:
        return cy_zero2(N)
    acc = cy_zero2(N)
    for s in range(N):
        term = greene_binom(F, (A[0] + s) % N, s % N)
        for i in range(1, len(A)):
            term = cy_mul(N, term, greene_binom(F, (A[i] + s) % N, (B[i - 1] + s) % N))
        term = cy_mul(N, term, cy_zeta(N, s * F.dlog(x)))
        acc = cy_add(acc, term)
    return cy_scale(acc, Fraction(F.q, F.q - 1))

def phi_val(F, x):
    # quadratic character as +-1 integer, 0 at 0
    if x == 0:
        return 0
    return 1 if (F.dlog(x) * ((F.q - 1) // 2)) % (F.q - 1) == 0 else -1

# ------------------------------------------------------------------ p-adics

def gamma_table(p, m):
    M = p ** m
    tab = [0] * M
    tab[0] = 1 % M
    for n in range(M - 1):
        f = 1 if n % p == 0 else n
        tab[n + 1] = (tab[n] * (-f)) % M
    return tab

def fr(x):
    x = Fraction(x)
    from math import floor
    fl = x.numerator // x.denominator
    return x - fl

def lift_frac(x, p, M):
    x = Fraction(x)
    assert x.denominator % p != 0
    return (x.numerator * pow(x.denominator, -1, M)) % M

def gamma_p(tab, p, M, x):
    return tab[lift_frac(fr(x), p, M)]

def teich(a, p, m):
    M = p ** m
    x = a % M
    for _ in range(m + 1):
        x = pow(x, p, M)
    assert pow(x, p, M) == x
    return x

def g_function(p, k, a_list, b_list, t):
    """McCarthy nGn[a;b|t] mod p^k. Returns (shift, unit mod p^{k+shift}) with
    value = unit / p^shift, or None for t = 0 mod p."""
    n = len(a_list)
    assert len(b_list) == n
    if t % p == 0:
        return (0, 0)
    af = [fr(a) for a in a_list]
    nbf = [fr(-Fraction(b)) for b in b_list]
    min_e = None
    ejs = []
    for j in range(p - 1):
        u = Fraction(j, p - 1)
        e = 0
        for i in range(n):
            from math import floor
            x1 = af[i] - u
            x2 = nbf[i] + u
            e += -(x1.numerator // x1.denominator) - (x2.numerator // x2.denominator)
        ejs.append(e)
        min_e = e if min_e is None else min(min_e, e)
    shift = max(0, -min_e)
    m = k + shift
    M = p ** m
    tab = gamma_table(p, m)
    dens = [gamma_p(tab, p, M, a) for a in af]
    denb = [gamma_p(tab, p, M, nb) for nb in nbf]
    w = teich(t, p, m)
    acc = 0
    for j in range(p - 1):
        u = Fraction(j, p - 1)
        sign = 1 if (j * n) % 2 == 0 else -1
        wbar = pow(w, (p - 1 - j) % (p - 1), M) if j else 1
        term = (sign * wbar) % M
        for i in range(n):
            term = term * gamma_p(tab, p, M, af[i] - u) % M
            term = term * pow(dens[i], -1, M) % M
            term = term * gamma_p(tab, p, M, nbf[i] + u) % M
            term = term * pow(denb[i], -1, M) % M
        e = ejs[j] + shift
        mp = (-p) % M
        term = term * pow(mp, e, M) % M
        acc = (acc + term) % M
    acc = acc * pow(p - 1, -1, M) % M
    acc = (-acc) % M
    # each term was scaled by (-p)^shift; dividing by p^shift leaves (-1)^shift
    if shift % 2:
        acc = (-acc) % M
    return (shift, acc)

def g_int(p, k, a_list, b_list, t):
    shift, unit = g_function(p, k, a_list, b_list, t)
    assert shift == 0
    return unit % (p ** k)

# ------------------------------------------------------------ brute counting

def count_points(F, d, lam):
    # affine solutions of x1^d + x2^d = d*lam*x1*x2^{d-1}
    q = F.q
    dd = d % F.p
    cnt = 0
    for x1 in range(q):
        for x2 in range(q):
            lhs = F.add(F.pow(x1, d), F.pow(x2, d))
            rhs = F.mul(F.mul(dd % F.p, lam), F.mul(x1, F.pow(x2, d - 1)))
            if lhs == rhs:
                cnt += 1
    assert (cnt - 1) % (q - 1) == 0
    return cnt, (cnt - 1) // (q - 1)

def root_count(F, d, lam):
    cnt = 0
    for x in range(F.q):
        v = F.add(F.pow(x, d), F.add(F.neg(F.mul(F.mul(d % F.p, lam), x)), 1))
        if v == 0:
            cnt += 1
    return cnt

# ============================================================ generation body

def main():
    out = []
    def emit(s=""):
        out.append(s)

    # --- cyclotomic polynomial samples
    phi12 = cyclotomic(12)
    phi30 = cyclotomic(30)
    phi105 = cyclotomic(105)
    assert phi12 == [1, 0, -1, 0, 1]
    assert phi30 == [1, 1, 0, -1, -1, -1, 0, 1, 1]
    assert min(phi105) == -2  # first index with coefficient magnitude 2

    # --- fields
    F7 = Fq(7, 1)
    F9 = Fq(3, 2)
    F13 = Fq(13, 1)
    F25 = Fq(5, 2)
    assert F7.g == 3
    assert F9.mod == [1, 0, 1] and F9.g == 4
    assert F25.mod == [2, 0, 1] and F25.g == 6
    assert F25.trace(F25._idx([0, 1])) == 0 and F25.trace(1) == 2
    tr25 = [F25.trace(x) for x in range(25)]
    tr9 = [F9.trace(x) for x in range(9)]

    # --- gauss / jacobi over F7 and F9
    g3_42 = gauss_sum(F7, 3, 42)
    j12 = jacobi_full(F7, 1, 2)
    # fusi3 sanity: g(T^k) g(T^-k) = q T^k(-1)
    for k in range(1, 6):
        lhs = cy_mul(42, gauss_sum(F7, k, 42), gauss_sum(F7, -k % 6, 42))
        rhs = cy_scale(char_val(F7, k, F7.neg(1), 42), 7)
        assert lhs == rhs
    g1_24 = gauss_sum(F9, 1, 24)
    lhs = cy_mul(24, g1_24, gauss_sum(F9, 7, 24))
    rhs = cy_scale(char_val(F9, 1, F9.neg(1), 24), 9)
    assert lhs == rhs
    # lemma6 sanity at q=7
    for (m1, m2) in [(1, 2), (2, 3), (1, 4)]:
        if (m1 + m2) % 6 != 0:
            j = jacobi_full(F7, m1, m2)
            g = cy_mul(42, gauss_sum(F7, m1, 42), gauss_sum(F7, m2, 42))
            gg = gauss_sum(F7, (m1 + m2) % 6, 42)
            # j embedded into conductor 42: zeta_6 = zeta_42^7
            jembed = cy_from_counts(42, [0] * 42)
            for e, c in enumerate(j):
                pass
            # direct: compare g(m1)g(m2) == J * g(m1+m2) via coefficients of J in zeta_6
            jemb = cy_zero2(42)
            for e, c in enumerate(j):
                jemb = cy_add(jemb, cy_scale(cy_zeta(42, 7 * e), c))
            assert g == cy_mul(42, jemb, gg)

    # --- binomial and Greene F over F7
    b21 = greene_binom(F7, 2, 1)
    # binom(eps,eps) = (q-2)/q
    bee = greene_binom(F7, 0, 0)
    assert bee == cy_rat(6, Fraction(5, 7))
    F21 = {x: greene_F(F7, [2, 4], [0], x) for x in range(1, 7)}

    # Greene summation (n=1) sanity at q=7 for a few tuples
    def greene_F0(F, A, x):
        N = F.q - 1
        if x == 0:
            return cy_zero2(N)
        acc = cy_zero2(N)
        for s in range(N):
            t = greene_binom(F, (A[0] + s) % N, s)
            acc = cy_add(acc, cy_mul(N, t, cy_zeta(N, s * F.dlog(x))))
        return cy_scale(acc, Fraction(F.q, F.q - 1))
    N6 = 6
    for (a0, a1, b1, x) in [(2, 1, 3, 1), (4, 5, 2, 3), (1, 1, 0, 5)]:
        lhs = greene_F(F7, [a0, a1], [b1], x)
        acc = cy_zero2(N6)
        neg1 = F7.neg(1)
        for y in range(7):
            oy = F7.sub(1, y)
            if y == 0 or oy == 0:
                continue
            t = greene_F0(F7, [a0], F7.mul(x, y))
            t = cy_mul(N6, t, cy_zeta(N6, a1 * F7.dlog(y)))
            t = cy_mul(N6, t, cy_zeta(N6, (b1 - a1) * F7.dlog(oy)))
            acc = cy_add(acc, t)
        pref = cy_scale(cy_zeta(N6, (a1 + b1) * F7.dlog(neg1)), Fraction(1, 7))
        assert lhs == cy_mul(N6, pref, acc)

    # --- gamma tables, teichmuller
    g5tab = gamma_table(5, 6)
    M56 = 5 ** 6
    gam5 = [g5tab[n] for n in range(13)]
    gam5_half = gamma_p(g5tab, 5, M56, Fraction(1, 2))
    g7tab = gamma_table(7, 5)
    M75 = 7 ** 5
    gam7_half = gamma_p(g7tab, 7, M75, Fraction(1, 2))
    t2_5 = teich(2, 5, 8)
    t3_7 = teich(3, 7, 6)
    assert t2_5 % 25 == 7
    assert gamma_p(gamma_table(5, 2), 5, 25, Fraction(1, 2)) == gamma_table(5, 2)[13]
    # reflection: Gamma_p(l/(p-1)) Gamma_p(<1-l/(p-1)>) = -(-1)^l  (omega-bar^l(-1) = (-1)^l)
    for l in range(1, 4):
        v = gamma_p(g5tab, 5, M56, Fraction(l, 4)) * gamma_p(g5tab, 5, M56, fr(1 - Fraction(l, 4))) % M56
        assert v == (-((-1) ** l)) % M56
    # multiplication (t=2, l=1, p=5): check lemma8(i) mod 5^6
    for l in range(0, 4):
        t = 2
        lhsv = teich(pow(t, t * l, 5 ** 6), 5, 6)
        lhsv = lhsv * gamma_p(g5tab, 5, M56, fr(Fraction(t * l, 4))) % M56
        for h in range(1, t):
            lhsv = lhsv * gamma_p(g5tab, 5, M56, Fraction(h, t)) % M56
        rhsv = 1
        for h in range(0, t):
            rhsv = rhsv * gamma_p(g5tab, 5, M56, fr(Fraction(h, t) + Fraction(l, 4))) % M56
        assert lhsv == rhsv

    # --- McCarthy G oracle values
    # 2G2[1/3,2/3;0,1/2 | 1] at p=11 should equal 1 (sum-zero special value, two equal entries)
    h = Fraction(1, 2)
    g2_p11 = g_int(11, 5, [Fraction(1, 3), Fraction(2, 3)], [0, h], 1)
    assert g2_p11 == 1
    # same list at p=13, argument 343/243 mod 13 = 2, distinct triple -> 2
    arg13 = (343 * pow(243, -1, 13)) % 13
    g2_p13 = g_int(13, 5, [Fraction(1, 3), Fraction(2, 3)], [0, h], arg13)
    assert g2_p13 % 13 ** 4 == 2            # theorem says exactly 2
    # MT1 at p=7, d=3: sum_t phi(t(t-1)) 2G2[1/3,2/3;0,0|xt] = -1 - 7*2G2[1/3,2/3;0,1/2|x]
    mt1_lhs = {}
    for x in range(1, 7):
        s = 0
        for t in range(7):
            ph = phi_val(F7, F7.mul(t, F7.sub(t, 1)))
            if ph == 0:
                continue
            s += ph * g_int(7, 5, [Fraction(1, 3), Fraction(2, 3)], [0, 0], F7.mul(x, t))
        rhs = -1 - 7 * g_int(7, 5, [Fraction(1, 3), Fraction(2, 3)], [0, h], x)
        assert (s - rhs) % 7 ** 4 == 0
        mt1_lhs[x] = s % 7 ** 5
    # point count vs G at p=7, d=3: N = 1 + G(lam^3 * 4) mod 7^4
    counts7 = {}
    gvals7 = {}
    for lam in range(1, 7):
        aff, proj = count_points(F7, 3, lam)
        alpha = F7.mul(F7.pow(lam, 3), 4)
        gv = g_int(7, 5, [Fraction(1, 3), Fraction(2, 3)], [0, h], alpha)
        assert (proj - 1 - gv) % 7 ** 4 == 0
        counts7[lam] = (aff, proj, root_count(F7, 3, lam))
        gvals7[lam] = gv
    # remark: projective count equals root count of x^d - d lam x + 1
    for lam in range(1, 7):
        assert counts7[lam][1] == counts7[lam][2]

    # --- point-count2 (F side) and MT-4 at q=7, d=3
    # chi = T^2, psi = phi = T^3; alpha = lam^3 * 4
    for lam in range(1, 7):
        alpha = F7.mul(F7.pow(lam, 3), 4)
        ia = F7.inv(alpha)
        S = cy_zero2(6)
        for t in range(7):
            ph = phi_val(F7, F7.sub(1, t))
            if ph == 0 or t == 0:
                continue
            S = cy_add(S, cy_scale(greene_F(F7, [2, 4], [0], F7.mul(t, ia)), ph))
        proj = counts7[lam][1]
        want = cy_rat(6, Fraction(7 * proj - 6, 7))
        assert S == want
    # MT-4 d=3 (corrected factor: q, not q*phi(-1); the printed form fails for q = 3 mod 4):
    # sum_t phi(1-t) 2F1(chi,chi^2;eps|lam t) = (1-phi(-lam))/q + q * 3F2(phi,chi,chi^2;phi,phi|lam)
    for lam in range(1, 7):
        S = cy_zero2(6)
        for t in range(7):
            ph = phi_val(F7, F7.sub(1, t))
            if ph == 0 or t == 0:
                continue
            S = cy_add(S, cy_scale(greene_F(F7, [2, 4], [0], F7.mul(lam, t)), ph))
        rhs = cy_rat(6, Fraction(1 - phi_val(F7, F7.neg(lam)), 7))
        f32 = greene_F(F7, [3, 2, 4], [3, 3], lam)
        rhs = cy_add(rhs, cy_scale(f32, 7))
        assert S == rhs

    # --- MT-6 odd branch spot check at p=7, d=3 (pure G level)
    # G_std[lam] = phi(3 lam) * 2G2[{0,1/2}; {1/6,5/6} | 1/lam]  (upper {0} u {h/2}, lower odd h/6, h != 3)
    for lam in range(1, 7):
        lhs = g_int(7, 5, [Fraction(1, 3), Fraction(2, 3)], [0, h], lam)
        ph = phi_val(F7, F7.mul(3, lam))
        rhs = g_int(7, 5, [0, h], [Fraction(1, 6), Fraction(5, 6)], F7.inv(lam))
        assert (lhs - ph * rhs) % 7 ** 4 == 0

    # --- emit header
    emit("// Generated by tests/oracles/gen_frozen_values.py. Do not edit by hand.")
    emit("#pragma once")
    emit("#include <vector>")
    emit("#include <string>")
    emit("")
    emit("namespace frozen {")
    emit("")
    def arr(name, vals, typ="long"):
        emit("inline const std::vector<%s> %s = {%s};" % (typ, name, ", ".join(str(v) for v in vals)))
    def sarr(name, vals):
        emit("inline const std::vector<std::string> %s = {%s};" % (name, ", ".join('"%s"' % v for v in vals)))
    arr("kPhi12", phi12)
    arr("kPhi30", phi30)
    arr("kPhi105", phi105)
    arr("kF9Modulus", F9.mod)
    arr("kF25Modulus", F25.mod)
    emit("inline const long kF7Generator = %d;" % F7.g)
    emit("inline const long kF9Generator = %d;" % F9.g)
    emit("inline const long kF13Generator = %d;" % F13.g)
    emit("inline const long kF25Generator = %d;" % F25.g)
    arr("kF9Trace", tr9)
    arr("kF25Trace", tr25)
    sarr("kF7GaussT3Cond42", [str(c) for c in g3_42])
    sarr("kF9GaussT1Cond24", [str(c) for c in g1_24])
    sarr("kF7Jacobi12", [str(c) for c in j12])
    sarr("kF7Binom21", [str(c) for c in b21])
    emit("// Greene 2F1(T^2, T^4; eps | x) over F_7, rows x=1..6, conductor 6")
    for x in range(1, 7):
        sarr("kF7Greene21_x%d" % x, [str(c) for c in F21[x]])
    arr("kGamma5Mod5e6", gam5)
    emit("inline const long kGamma5HalfMod5e6 = %d;" % gam5_half)
    emit("inline const long kGamma7HalfMod7e5 = %d;" % gam7_half)
    emit("inline const long kTeich2Mod5e8 = %d;" % t2_5)
    emit("inline const long kTeich3Mod7e6 = %d;" % t3_7)
    emit("inline const long kG2P11Arg1Mod11e5 = %d;" % g2_p11)
    emit("inline const long kG2P13ArgSVMod13e5 = %d;" % g2_p13)
    arr("kMT1LhsP7Mod7e5", [mt1_lhs[x] for x in range(1, 7)])
    arr("kAffineP7D3", [counts7[l][0] for l in range(1, 7)])
    arr("kProjP7D3", [counts7[l][1] for l in range(1, 7)])
    arr("kRootsP7D3", [counts7[l][2] for l in range(1, 7)])
    arr("kGStdP7D3Mod7e5", [gvals7[l] for l in range(1, 7)])
    emit("")
    emit("} // namespace frozen")
    sys.stdout.write("\n".join(out) + "\n")

if __name__ == "__main__":
    main()
