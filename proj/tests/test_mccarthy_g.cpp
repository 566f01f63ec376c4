#include <stdexcept>

#include "doctest.h"
#include "frozen_values.hpp"
#include "hyperchar/finite_field.hpp"
#include "hyperchar/characters.hpp"
#include "hyperchar/mccarthy_g.hpp"

namespace hc = hyperchar;

TEST_CASE("special values match the independent oracle") {
    hc::GParams gp;
    gp.p = 11;
    gp.k = 5;
    gp.a = {hc::Rat(1, 3), hc::Rat(2, 3)};
    gp.b = {hc::Rat(0), hc::Rat(1, 2)};
    gp.t = 1;
    CHECK(hc::g_function(gp).residue(5) == frozen::kG2P11Arg1Mod11e5);

    gp.p = 13;
    gp.t = 2;  // 343/243 mod 13
    CHECK(hc::g_function(gp).residue(5) == frozen::kG2P13ArgSVMod13e5);
}

TEST_CASE("values feeding the point-count comparison at p = 7") {
    auto F = hc::FieldCtx::make(7, 1);
    hc::GParams gp;
    gp.p = 7;
    gp.k = 5;
    gp.a = {hc::Rat(1, 3), hc::Rat(2, 3)};
    gp.b = {hc::Rat(0), hc::Rat(1, 2)};
    for (long lam = 1; lam <= 6; ++lam) {
        gp.t = F->mul(F->pow(lam, 3), 4);
        CHECK(hc::g_function(gp).residue(5) ==
              frozen::kGStdP7D3Mod7e5[static_cast<size_t>(lam - 1)]);
    }
}

TEST_CASE("twisted sums match the independent oracle") {
    auto F = hc::FieldCtx::make(7, 1);
    hc::GParams gp;
    gp.p = 7;
    gp.k = 5;
    gp.a = {hc::Rat(1, 3), hc::Rat(2, 3)};
    gp.b = {hc::Rat(0), hc::Rat(0)};
    for (long x = 1; x <= 6; ++x) {
        auto acc = hc::PadicScalar::exact_zero(7);
        for (long t = 0; t < 7; ++t) {
            int ph = hc::phi_value(*F, F->mul(t, F->sub(t, 1)));
            if (ph == 0) continue;
            gp.t = F->mul(x, t);
            auto v = hc::g_function(gp);
            acc = acc + (ph == 1 ? v : -v);
        }
        CHECK(acc.residue(5) == frozen::kMT1LhsP7Mod7e5[static_cast<size_t>(x - 1)]);
    }
}

TEST_CASE("series conventions") {
    hc::GParams gp;
    gp.p = 11;
    gp.k = 5;
    gp.a = {hc::Rat(1, 3), hc::Rat(2, 3)};
    gp.b = {hc::Rat(0), hc::Rat(1, 2)};
    gp.t = 4;
    auto v = hc::g_function(gp);

    // parameter lists are unordered multisets
    hc::GParams perm = gp;
    perm.a = {hc::Rat(2, 3), hc::Rat(1, 3)};
    perm.b = {hc::Rat(1, 2), hc::Rat(0)};
    CHECK(hc::diff_valuation(v, hc::g_function(perm)) >= 5);

    // the argument only matters mod p
    hc::GParams shifted = gp;
    shifted.t = 4 + 11;
    CHECK(hc::diff_valuation(v, hc::g_function(shifted)) >= 5);

    // parameters only matter mod Z after the fractional-part lattice shift
    hc::GParams lifted = gp;
    lifted.a = {hc::Rat(4, 3), hc::Rat(2, 3)};
    CHECK(hc::diff_valuation(v, hc::g_function(lifted)) >= 5);

    gp.t = 0;
    CHECK(hc::g_function(gp).is_zero());
}

TEST_CASE("parameter validation") {
    hc::GParams gp;
    gp.p = 7;
    gp.a = {hc::Rat(1, 3)};
    gp.b = {};
    gp.t = 1;
    CHECK_THROWS_AS(hc::g_function(gp), std::invalid_argument);
    gp.b = {hc::Rat(0)};
    gp.a = {hc::Rat(1, 7)};
    CHECK_THROWS_AS(hc::g_function(gp), std::invalid_argument);
    gp.a = {hc::Rat(1, 3)};
    gp.k = 0;
    CHECK_THROWS_AS(hc::g_function(gp), std::invalid_argument);
}
