#include <string>
#include <vector>

#include "doctest.h"
#include "frozen_values.hpp"
#include "hyperchar/greene_f.hpp"

namespace hc = hyperchar;

namespace {

hc::CycloNum from_frozen(long N, const std::vector<std::string>& coeffs) {
    std::vector<hc::Rat> c;
    for (const auto& s : coeffs) {
        hc::Rat r(s, 10);
        r.canonicalize();
        c.push_back(r);
    }
    return hc::CycloNum::make(N, c);
}

}  // namespace

TEST_CASE("2F1 values match the independent table") {
    hc::GreeneParams gp;
    gp.ctx = hc::FieldCtx::make(7, 1);
    gp.A = {2, 4};
    gp.B = {0};
    const std::vector<const std::vector<std::string>*> rows = {
        &frozen::kF7Greene21_x1, &frozen::kF7Greene21_x2, &frozen::kF7Greene21_x3,
        &frozen::kF7Greene21_x4, &frozen::kF7Greene21_x5, &frozen::kF7Greene21_x6};
    for (long x = 1; x <= 6; ++x) {
        gp.x = x;
        CHECK(hc::greene_F(gp) == from_frozen(6, *rows[static_cast<size_t>(x - 1)]));
    }
    gp.x = 0;
    CHECK(hc::greene_F(gp).is_zero());
}

TEST_CASE("series is well defined under exponent shifts mod q-1") {
    hc::GreeneParams gp;
    gp.ctx = hc::FieldCtx::make(7, 1);
    gp.A = {2, 4};
    gp.B = {0};
    gp.x = 3;
    auto v = hc::greene_F(gp);
    gp.A = {8, -2};
    gp.B = {6};
    CHECK(hc::greene_F(gp) == v);
}

TEST_CASE("parameter validation") {
    hc::GreeneParams gp;
    gp.A = {1, 2};
    gp.B = {0};
    gp.x = 1;
    CHECK_THROWS_AS(hc::greene_F(gp), std::invalid_argument);
    gp.ctx = hc::FieldCtx::make(7, 1);
    gp.B = {0, 0};
    CHECK_THROWS_AS(hc::greene_F(gp), std::invalid_argument);
    gp.A = {1};
    gp.B = {};
    CHECK_THROWS_AS(hc::greene_summation_check(gp), std::invalid_argument);
}

TEST_CASE("summation reduction holds exactly") {
    hc::GreeneParams gp;
    gp.ctx = hc::FieldCtx::make(7, 1);
    for (auto [a0, a1, b1] : {std::tuple<long, long, long>{2, 1, 3},
                              std::tuple<long, long, long>{4, 5, 2},
                              std::tuple<long, long, long>{1, 1, 0}}) {
        gp.A = {a0, a1};
        gp.B = {b1};
        for (long x = 0; x < 7; ++x) {
            gp.x = x;
            auto r = hc::greene_summation_check(gp);
            CHECK(r.passed());
            CHECK(r.has_exact_zero);
            CHECK(r.exact_zero);
        }
    }
    // one level higher over a degree-2 extension
    gp.ctx = hc::FieldCtx::make(3, 2);
    gp.A = {1, 3, 5};
    gp.B = {2, 4};
    for (long x : {1L, 5L, 8L}) {
        gp.x = x;
        CHECK(hc::greene_summation_check(gp).passed());
    }
}
