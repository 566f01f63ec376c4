#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "frozen_values.hpp"
#include "hyperchar/cyclotomic.hpp"

namespace hc = hyperchar;

namespace {

void check_phi(long N, const std::vector<long>& want) {
    auto f = hc::CycloField::get(N);
    REQUIRE(f->phi().size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(f->phi()[i] == want[i]);
    CHECK(f->degree() == static_cast<long>(want.size()) - 1);
    CHECK(f->conductor() == N);
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the independent table") {
    check_phi(12, frozen::kPhi12);
    check_phi(30, frozen::kPhi30);
    // degree 48, first conductor with a coefficient of magnitude 2
    check_phi(105, frozen::kPhi105);
}

TEST_CASE("zeta powers reduce against the minimal polynomial") {
    // zeta_6^2 = zeta_6 - 1 since Phi_6 = x^2 - x + 1
    auto z2 = hc::CycloNum::zeta_pow(6, 2);
    REQUIRE(z2.coeffs().size() == 2);
    CHECK(z2.coeffs()[0] == hc::Rat(-1));
    CHECK(z2.coeffs()[1] == hc::Rat(1));
    // full orbit sum vanishes
    auto s = hc::CycloNum::from_counts(5, std::vector<hc::Rat>(5, hc::Rat(1)));
    CHECK(s.is_zero());
    // negative exponents wrap
    CHECK(hc::CycloNum::zeta_pow(6, -1) == hc::CycloNum::zeta_pow(6, 5));
    CHECK(hc::CycloNum::zeta_pow(7, 3).pow(7) == hc::CycloNum::one(7));
}

TEST_CASE("ring operations") {
    auto a = hc::CycloNum::make(12, {hc::Rat(1), hc::Rat(2), hc::Rat(0), hc::Rat(1)});
    auto b = hc::CycloNum::zeta_pow(12, 7);
    auto one = hc::CycloNum::one(12);
    CHECK(a + b - b == a);
    CHECK(a * one == a);
    CHECK((a + b) * b == a * b + b * b);
    CHECK(a * hc::Rat(3, 2) + a * hc::Rat(1, 2) == a + a);
    CHECK((-a) + a == hc::CycloNum::zero(12));
}

TEST_CASE("inverse and division") {
    auto x = hc::CycloNum::one(5) + hc::CycloNum::zeta_pow(5, 1);
    CHECK(x * x.inverse() == hc::CycloNum::one(5));
    CHECK(x / x == hc::CycloNum::one(5));
    CHECK(x.pow(0) == hc::CycloNum::one(5));
    CHECK_THROWS_AS(hc::CycloNum::zero(5).inverse(), std::domain_error);
}

TEST_CASE("rationality detection") {
    hc::Rat r;
    CHECK(hc::CycloNum::from_rational(6, hc::Rat(5, 7)).is_rational(&r));
    CHECK(r == hc::Rat(5, 7));
    CHECK_FALSE(hc::CycloNum::zeta_pow(6, 1).is_rational());
    // zeta_5 + zeta_5^2 + zeta_5^3 + zeta_5^4 = -1
    auto s = hc::CycloNum::zero(5);
    for (long e = 1; e <= 4; ++e) s = s + hc::CycloNum::zeta_pow(5, e);
    CHECK(s.is_rational(&r));
    CHECK(r == hc::Rat(-1));
}

TEST_CASE("embedding into a larger conductor is a ring homomorphism") {
    auto a = hc::CycloNum::make(6, {hc::Rat(2), hc::Rat(-1)});
    auto b = hc::CycloNum::zeta_pow(6, 1) * hc::Rat(3);
    CHECK(a.embed_into(42) + b.embed_into(42) == (a + b).embed_into(42));
    CHECK(a.embed_into(42) * b.embed_into(42) == (a * b).embed_into(42));
    // zeta_6 maps to zeta_42^7
    CHECK(hc::CycloNum::zeta_pow(6, 1).embed_into(42) == hc::CycloNum::zeta_pow(42, 7));
    CHECK_THROWS_AS(a.embed_into(8), std::invalid_argument);
}

TEST_CASE("construction guards and rendering") {
    CHECK_THROWS_AS(hc::CycloField::get(0), std::invalid_argument);
    CHECK_THROWS_AS(
        hc::CycloNum::from_counts(5, std::vector<hc::Rat>(3, hc::Rat(1))),
        std::invalid_argument);
    auto a = hc::CycloNum::zeta_pow(12, 1);
    CHECK(a.to_string().find("zeta_12") != std::string::npos);
}
