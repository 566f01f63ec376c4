#pragma once
#include <memory>
#include <vector>

#include "hyperchar/char_sums.hpp"
#include "hyperchar/cyclotomic.hpp"
#include "hyperchar/finite_field.hpp"
#include "hyperchar/report.hpp"

namespace hyperchar {

// Parameters of the finite-field hypergeometric series (n+1)F(n): upper
// character exponents A[0..n], lower exponents B[1..n] (stored as B[0..n-1]),
// and a field-element argument x.
struct GreeneParams {
    std::shared_ptr<const FieldCtx> ctx;
    std::vector<long> A;
    std::vector<long> B;
    long x = 0;
};

// (q/(q-1)) * sum_chi (A0 chi over chi) prod_i (Ai chi over Bi chi) chi(x),
// an exact value of conductor q-1
CycloNum greene_F(const GreeneParams& params);

// reduction of (n+1)Fn to a twisted sum of nF(n-1) values over the argument
// orbit (the generic summation identity); exact equality, needs n >= 1
Report greene_summation_check(const GreeneParams& params);

}  // namespace hyperchar
