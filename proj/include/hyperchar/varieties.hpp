#pragma once
#include <memory>

#include "hyperchar/finite_field.hpp"
#include "hyperchar/report.hpp"

namespace hyperchar {

// One member of the family Z_lambda: x1^d + x2^d = d*lambda*x1*x2^(d-1),
// with lambda given as a field element index.
struct CurveInstance {
    std::shared_ptr<const FieldCtx> ctx;
    long d = 3;
    long lambda = 0;
};

// Exhaustive counts attached to one instance.
struct CountResult {
    long affine = 0;      // pairs (x1, x2) in F_q^2 on the affine cone
    long projective = 0;  // points of Z_lambda in P^1, (affine - 1)/(q - 1)
    long roots = 0;       // distinct zeros of x^d - d*lambda*x + 1 in F_q
};

// Counts the affine solutions over all q^2 pairs, derives the projective
// count from the scaling-orbit quotient, and counts the roots of
// x^d - d*lambda*x + 1.  For lambda != 0 the projective and root counts
// must agree; a mismatch throws (it would falsify the root-count oracle).
CountResult count_points(const CurveInstance& inst);

// Checks 1 + (d-1)G(d-1)[1/d .. (d-1)/d; 0, 1/(d-1) .. (d-2)/(d-1) | alpha]
// with alpha = lambda^d (d-1)^(d-1) against the projective count, as a
// congruence mod p^(k-1).  Prime fields only; hypothesis violations skip.
Report thm_pointcount_G(const CurveInstance& inst, long k);

// Checks the exact Greene-series count q*N = q - 1 + q^((d-1)/2) *
// sum_t phi(1-t) (d-1)F(d-2)(... | t/alpha) where the upper characters run
// through the nontrivial powers of an order-d character and the lower ones
// through powers of an order-(d-1) character.  Needs d >= 3 odd and
// q = 1 mod d(d-1); exact cyclotomic comparison.
Report thm_pointcount_F(const CurveInstance& inst);

}  // namespace hyperchar
