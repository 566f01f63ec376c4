#pragma once
#include <vector>

#include "hyperchar/padic.hpp"
#include "hyperchar/rational_util.hpp"

namespace hyperchar {

// Parameters of the p-adic hypergeometric series nGn[a1..an; b1..bn | t]:
// rational parameters with denominators coprime to p and an argument taken
// mod p.
struct GParams {
    long p = 0;
    long k = 5;
    std::vector<Rat> a;
    std::vector<Rat> b;
    long t = 0;
};

// -1/(p-1) * sum_j (-1)^(jn) omega_bar^j(t) prod_i (-p)^(e_ij) *
//   Gamma_p(<a_i - j/(p-1)>)/Gamma_p(<a_i>) * Gamma_p(<-b_i + j/(p-1)>)/Gamma_p(<-b_i>)
// with e_ij = -floor(<a_i> - j/(p-1)) - floor(<-b_i> + j/(p-1)).  The working
// precision is raised internally so the returned value is correct mod p^k even
// when some summand has negative (-p)-exponent.  Returns 0 when t = 0 mod p.
PadicScalar g_function(const GParams& params);

}  // namespace hyperchar
