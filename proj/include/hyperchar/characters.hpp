#pragma once
#include <memory>

#include "hyperchar/cyclotomic.hpp"
#include "hyperchar/finite_field.hpp"
#include "hyperchar/padic.hpp"
#include "hyperchar/report.hpp"

namespace hyperchar {

// T^m(x): zero at x = 0 (all m, by the chi(0) = 0 convention), otherwise
// zeta_{q-1}^{m*dlog(x)}; conductor q-1
CycloNum char_eval(const FieldCtx& F, long m, long x);

// theta(x) = zeta_p^{trace(x)}; conductor p
CycloNum additive_char(const FieldCtx& F, long x);

// exponent of the quadratic character phi = T^{(q-1)/2}
long phi_exponent(const FieldCtx& F);

// phi(x) as an integer in {-1, 0, 1}
int phi_value(const FieldCtx& F, long x);

// omega^l(x) as a unit mod p^k, the Teichmuller realization over the prime
// field; x must be nonzero mod p
PadicScalar teich_realize(long p, long l, long x, long k);

// exhaustive orthogonality relations: sum over x of T^m(x) vanishes unless
// m = 0, and sum over m of T^m(x) vanishes unless x = 1
Report orthogonality_check(const std::shared_ptr<const FieldCtx>& ctx);

}  // namespace hyperchar
