#include "hyperchar/varieties.hpp"

#include <chrono>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperchar/characters.hpp"
#include "hyperchar/cyclotomic.hpp"
#include "hyperchar/greene_f.hpp"
#include "hyperchar/mccarthy_g.hpp"
#include "hyperchar/padic.hpp"

namespace hyperchar {

namespace {

using Clock = std::chrono::steady_clock;

void stamp(Report& r, const Clock::time_point& t0) {
    r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Report skip(Report r, const std::string& reason, const Clock::time_point& t0) {
    r.status = Report::Status::skip;
    r.skip_reason = reason;
    stamp(r, t0);
    return r;
}

}  // namespace

CountResult count_points(const CurveInstance& inst) {
    if (!inst.ctx) throw std::invalid_argument("count_points: missing field context");
    if (inst.d < 2) throw std::invalid_argument("count_points: d must be at least 2");
    const FieldCtx& F = *inst.ctx;
    long q = F.q();
    long dl = F.mul(F.from_int(inst.d), inst.lambda);

    std::vector<long> xd(static_cast<size_t>(q)), xd1(static_cast<size_t>(q));
    for (long x = 0; x < q; ++x) {
        xd1[static_cast<size_t>(x)] = F.pow(x, inst.d - 1);
        xd[static_cast<size_t>(x)] = F.mul(xd1[static_cast<size_t>(x)], x);
    }

    CountResult res;
    for (long x1 = 0; x1 < q; ++x1) {
        long lhs1 = xd[static_cast<size_t>(x1)];
        long row = 0;
        for (long x2 = 0; x2 < q; ++x2) {
            long lhs = F.add(lhs1, xd[static_cast<size_t>(x2)]);
            long rhs = F.mul(dl, F.mul(x1, xd1[static_cast<size_t>(x2)]));
            if (lhs == rhs) ++row;
        }
        res.affine += row;
    }
    if ((res.affine - 1) % (q - 1) != 0)
        throw std::logic_error("count_points: affine count breaks the scaling-orbit law");
    res.projective = (res.affine - 1) / (q - 1);

    for (long x = 0; x < q; ++x) {
        long val = F.add(F.sub(xd[static_cast<size_t>(x)], F.mul(dl, x)), 1);
        if (val == 0) ++res.roots;
    }
    if (inst.lambda != 0 && res.projective != res.roots)
        throw std::logic_error("count_points: projective count disagrees with the root count");
    return res;
}

Report thm_pointcount_G(const CurveInstance& inst, long k) {
    auto t0 = Clock::now();
    const FieldCtx& F = *inst.ctx;
    long d = inst.d;
    Report r;
    r.id = "POINT_G";
    r.set_param("p", std::to_string(F.p()));
    r.set_param("d", std::to_string(d));
    r.set_param("lambda", std::to_string(inst.lambda));
    r.set_param("k", std::to_string(k));
    if (k < 2) throw std::invalid_argument("thm_pointcount_G: k must be at least 2");

    if (F.e() != 1) return skip(std::move(r), "base field only (e = 1)", t0);
    if (d % F.p() == 0 || (d - 1) % F.p() == 0)
        return skip(std::move(r), "p divides d(d-1)", t0);
    if (inst.lambda == 0) return skip(std::move(r), "lambda = 0", t0);

    CountResult cnt = count_points(inst);

    GParams gp;
    gp.p = F.p();
    gp.k = k;
    for (long h = 1; h <= d - 1; ++h) gp.a.push_back(make_rat(h, d));
    gp.b.emplace_back(0);
    for (long h = 1; h <= d - 2; ++h) gp.b.push_back(make_rat(h, d - 1));
    gp.t = F.mul(F.pow(inst.lambda, d), F.pow(F.from_int(d - 1), d - 1));

    PadicScalar lhs = PadicScalar::from_int(F.p(), cnt.projective, k);
    PadicScalar rhs = PadicScalar::from_int(F.p(), 1, k) + g_function(gp);
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.has_diff_valuation = true;
    r.diff_valuation = diff_valuation(lhs, rhs);
    r.status = r.diff_valuation >= k - 1 ? Report::Status::pass : Report::Status::fail;
    stamp(r, t0);
    return r;
}

Report thm_pointcount_F(const CurveInstance& inst) {
    auto t0 = Clock::now();
    const FieldCtx& F = *inst.ctx;
    long d = inst.d, q = F.q();
    Report r;
    r.id = "POINT_F";
    r.set_param("q", std::to_string(q));
    r.set_param("d", std::to_string(d));
    r.set_param("lambda", std::to_string(inst.lambda));

    if (d < 3 || d % 2 == 0) return skip(std::move(r), "d must be odd and >= 3", t0);
    if ((q - 1) % (d * (d - 1)) != 0) return skip(std::move(r), "q != 1 mod d(d-1)", t0);
    if (inst.lambda == 0) return skip(std::move(r), "lambda = 0", t0);

    CountResult cnt = count_points(inst);

    long N = q - 1;
    long cd = N / d;        // exponent of the order-d character chi
    long cp = N / (d - 1);  // exponent of the order-(d-1) character psi
    long h2 = (d - 1) / 2;

    // Upper row chi^h2, chi, .., chi^(h2-1), chi^(h2+1), .., chi^(d-1);
    // lower row psi, .., psi^(h2-1), epsilon, psi^(h2+1), .., psi^(d-2).
    GreeneParams fp;
    fp.ctx = inst.ctx;
    fp.A.push_back(h2 * cd);
    for (long h = 1; h <= h2 - 1; ++h) {
        fp.A.push_back(h * cd);
        fp.B.push_back(h * cp);
    }
    fp.A.push_back((h2 + 1) * cd);
    fp.B.push_back(0);
    for (long h = h2 + 2; h <= d - 1; ++h) {
        fp.A.push_back(h * cd);
        fp.B.push_back((h - 1) * cp);
    }

    long ainv = F.inv(F.mul(F.pow(inst.lambda, d), F.pow(F.from_int(d - 1), d - 1)));
    CycloNum sum = CycloNum::zero(N);
    for (long t = 0; t < q; ++t) {
        int ph = phi_value(F, F.sub(1, t));
        if (ph == 0) continue;
        fp.x = F.mul(t, ainv);
        CycloNum val = greene_F(fp);
        sum = ph == 1 ? sum + val : sum - val;
    }

    Rat qpow(pow_int(q, static_cast<unsigned long>(h2)));
    CycloNum lhs = CycloNum::from_rational(N, Rat(q) * Rat(cnt.projective));
    CycloNum rhs = CycloNum::from_rational(N, Rat(q - 1)) + sum * qpow;
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.has_exact_zero = true;
    r.exact_zero = lhs == rhs;
    r.status = r.exact_zero ? Report::Status::pass : Report::Status::fail;
    stamp(r, t0);
    return r;
}

}  // namespace hyperchar
