#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlasym/specfun.hpp"
#include "test_util.hpp"

using namespace mlasym;
using namespace mlasym_test;

namespace {
const PrecisionContext ctx(40, 10);
}

TEST_CASE("gamma at one half is sqrt(pi)") {
    BigReal g = gamma_hp(real_of("0.5", 60), ctx);
    PrecisionGuard guard(60);
    CHECK(close_abs_rel(g, sqrt(pi_value(60)), 40));
}

TEST_CASE("gamma at 20 is 19! exactly") {
    BigReal g = gamma_hp(BigReal(20, 60U), ctx);
    CHECK(close_rel(g, "121645100408832000", 40));
}

TEST_CASE("gamma at 0.2 cross-checked two ways") {
    BigReal g = gamma_hp(real_of("0.2", 60), ctx);
    CHECK(close_rel(g, "4.590843711998803053204758275929152", 30));
    // recurrence route: Gamma(0.2) = Gamma(1.2)/0.2
    BigReal via_rec = gamma_hp(real_of("1.2", 60), ctx) / real_of("0.2", 60);
    CHECK(close_abs_rel(g, via_rec, 38));
    // independent native evaluation
    PrecisionGuard guard(60);
    BigReal native = tgamma(real_of("0.2", 60));
    CHECK(close_abs_rel(g, native, 38));
}

TEST_CASE("gamma recurrence property on random arguments") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        PrecisionGuard guard(60);
        BigReal y = to_real(rng.rational(0.1, 30.0), 60);
        BigReal lhs = gamma_hp(BigReal(y + 1), ctx);
        BigReal rhs = y * gamma_hp(y, ctx);
        CHECK(abs(lhs - rhs) < ten_to(-38) * abs(lhs));
    }
}

TEST_CASE("gamma reflection covers negative arguments") {
    // Gamma(-18.8) via recurrence from Gamma(1.2)
    PrecisionGuard guard(80);
    BigReal y = real_of("-18.8", 80);
    BigReal expect = gamma_hp(real_of("1.2", 80), ctx);
    BigReal f = real_of("1.2", 80);
    for (int j = 0; j < 20; ++j) {  // walk down to -18.8
        f -= 1;
        expect /= f;
    }
    CHECK(close_abs_rel(gamma_hp(y, ctx), expect, 36));
}

TEST_CASE("gamma poles raise") {
    CHECK_THROWS_AS(gamma_hp(BigReal(0, 40U), ctx), GammaPole);
    CHECK_THROWS_AS(gamma_hp(BigReal(-4, 40U), ctx), GammaPole);
}

TEST_CASE("reciprocal gamma is exactly zero at nonpositive integers") {
    CHECK(recip_gamma(Rational(0), ctx).is_zero());
    CHECK(recip_gamma(Rational(-7), ctx).is_zero());
    CHECK(!recip_gamma(Rational(1, 2), ctx).is_zero());
}

TEST_CASE("bernoulli and pochhammer spot values") {
    CHECK(bernoulli_2k(1) == Rational(1, 6));
    CHECK(bernoulli_2k(2) == Rational(-1, 30));
    CHECK(bernoulli_2k(5) == Rational(5, 66));
    CHECK(bernoulli_2k(10) == Rational(-174611, 330));
    CHECK(pochhammer_half(0) == Rational(1));
    CHECK(pochhammer_half(1) == Rational(1, 2));
    CHECK(pochhammer_half(3) == Rational(15, 8));
}

TEST_CASE("erfc at zero is one") {
    BigComplex r = erfc_complex(BigComplex(), ctx);
    CHECK(r.re == 1);
    CHECK(r.im.is_zero());
}

TEST_CASE("erfc reflection identity for random complex arguments") {
    Rng rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        PrecisionGuard guard(60);
        BigComplex w(BigReal(rng.uniform(-6, 6)), BigReal(rng.uniform(-6, 6)));
        BigComplex sum = erfc_complex(w, ctx) + erfc_complex(-w, ctx);
        // scale of the identity is max(1, e^{-Re w^2})
        BigReal scale = exp(BigReal(w.im * w.im - w.re * w.re));
        if (scale < 1) scale = 1;
        CHECK(abs(sum - BigComplex(2)) < ten_to(-38) * scale);
    }
}

TEST_CASE("erfc(1) against a frozen high-order Maclaurin oracle") {
    // independent oracle: direct term loop at 80 digits
    PrecisionGuard guard(80);
    BigReal term = BigReal(1);  // w^(2n+1)/n! at w=1
    BigReal sum(0);
    for (unsigned n = 0; n < 200; ++n) {
        sum += term / static_cast<long>(2 * n + 1);
        term = -term / static_cast<long>(n + 1);
    }
    BigReal oracle = 1 - 2 * sum / sqrt(pi_value(80));
    CHECK(close_rel(oracle, "0.15729920705028513065877936491739674", 30));  // frozen
    BigComplex r = erfc_complex(BigComplex(BigReal(1, 60U)), ctx);
    CHECK(close_abs_rel(r.re, oracle, 39));
    CHECK(abs(r.im) < ten_to(-39));
}

TEST_CASE("erfc conjugate symmetry") {
    Rng rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        PrecisionGuard guard(60);
        BigComplex w(BigReal(rng.uniform(-4, 8)), BigReal(rng.uniform(-5, 5)));
        BigComplex a = erfc_complex(conj(w), ctx);
        BigComplex b = conj(erfc_complex(w, ctx));
        BigReal scale = abs(b);
        if (scale < 1) scale = 1;
        CHECK(abs(a - b) < ten_to(-38) * scale);
    }
}

TEST_CASE("erfc is real on the real axis") {
    for (double v : {0.25, 2.0, 9.5, 30.0, -3.5}) {
        BigComplex r = erfc_complex(BigComplex(BigReal(v, 60U)), ctx);
        CHECK(abs(r.im) < ten_to(-40) * (abs(r.re) + 1));
    }
}

TEST_CASE("branch seam continuity at the switch radius") {
    // both branches agree to 10^(-digits+2) on the switch circle
    const long digits = 40;
    PrecisionGuard guard(80);
    BigReal r_switch = BigReal(digits) / 4;  // == max(4, digits/4) here
    for (double angle : {0.0, 0.3, 0.6, 0.78}) {
        BigComplex w(r_switch * cos(BigReal(angle)), r_switch * sin(BigReal(angle)));
        BigComplex cf;
        bool ok = detail::erfc_cf_branch(w, digits + 10, cf);
        REQUIRE(ok);
        BigComplex series = detail::erfc_series_branch(w, digits + 10);
        BigReal scale = abs(series);
        BigReal ew2 = exp(BigReal(w.im * w.im - w.re * w.re));
        if (ew2 > scale) scale = ew2;
        CHECK(abs(cf - series) < ten_to(-(digits - 2)) * scale);
    }
}

TEST_CASE("erfc asymptotic magnitude for large arguments") {
    // erfc(20) ~ e^{-400}/(20 sqrt(pi)), relative deviation below 1.3e-3
    PrecisionGuard guard(80);
    BigComplex r = erfc_complex(BigComplex(BigReal(20, 80U)), ctx);
    BigReal lead = exp(BigReal(-400)) / (20 * sqrt(pi_value(80)));
    CHECK(abs(r.re - lead) < lead * BigReal("1.3e-3"));
    CHECK(abs(r.re - lead) > lead * BigReal("1.1e-3"));  // the 1/(2w^2) correction
}
