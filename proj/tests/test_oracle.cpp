#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlasym/algebraic.hpp"
#include "mlasym/ml_oracle.hpp"
#include "mlasym/specfun.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace mlasym;
using namespace mlasym_test;

namespace {
const PrecisionContext ctx(30, 10);
}

TEST_CASE("order one reduces to the exponential") {
    BigReal v = ml_negative_axis(Rational(1), Rational(3), 40);
    PrecisionGuard guard(60);
    CHECK(close_abs_rel(v, exp(BigReal(-3)), 38));
}

TEST_CASE("value at z = 0 is 1/Gamma(b)") {
    MLParams p;
    p.a = Rational(1, 2);
    p.z = MLPoint{Rational(0), Rational(0)};
    CHECK(close_abs_rel(eval_ml_series(p, 30).re, BigReal(1), 29));

    p.b = Rational(3, 10);
    BigComplex v = eval_ml_series(p, 30);
    CHECK(close_abs_rel(v.re, recip_gamma(Rational(3, 10), ctx), 28));
}

TEST_CASE("cancellation digit estimates") {
    CHECK(cancellation_digits(Rational(1), Rational(40)) == 28);
    CHECK(cancellation_digits(Rational(1, 2), Rational(5)) == 21);
}

TEST_CASE("composite remainder from the convergence table") {
    // R_M(0.99; -40) with M = 42 equals the printed composite to 15 digits
    Rational a(99, 100);
    BigReal r = recursion_check(a, Rational(40), 42, PrecisionContext(20, 10));
    CHECK(close_rel(r, "1.569133223265642e-19", 15));
}

TEST_CASE("shifted-series remainder equals oracle minus partial sum") {
    Rng rng(41);
    for (int trial = 0; trial < 8; ++trial) {
        Rational a = rng.rational(0.35, 0.99);
        // keep X = x^(1/a) moderate so the cancellation budget stays small
        double a_d = to_real(a, 30).convert_to<double>();
        long x_hi = static_cast<long>(std::pow(70.0, a_d));
        Rational x(rng.integer(2, x_hi < 2 ? 2 : x_hi));
        long M = rng.integer(0, 40);
        BigReal lhs = recursion_check(a, x, M, ctx);
        BigReal rhs = script_E_at(a, x, M, ctx);
        PrecisionGuard guard(60);
        BigReal scale = abs(lhs);
        if (scale.is_zero()) scale = 1;
        CHECK(abs(lhs - rhs) < ten_to(-25) * scale);
    }
}

TEST_CASE("M = 0 shifted series is the function itself") {
    Rational a(7, 10);
    BigReal direct = ml_negative_axis(a, Rational(6), 35);
    BigReal shifted = recursion_check(a, Rational(6), 0, PrecisionContext(35, 10));
    CHECK(close_abs_rel(shifted, direct, 30));
}

TEST_CASE("recursion identity holds for every M in 1..60") {
    Rational a(9, 10);
    Rational x(20);
    BigReal e = ml_negative_axis(a, x, 45);
    const PrecisionContext actx(45, 10);
    for (long m = 1; m <= 60; ++m) {
        BigReal lhs = recursion_check(a, x, m, PrecisionContext(25, 10));
        PrecisionGuard guard(70);
        BigReal rhs = e - algebraic_partial_sum(a, x, m, actx);
        BigReal scale = abs(lhs);
        if (scale < ten_to(-40)) scale = ten_to(-40);
        CHECK(abs(lhs - rhs) < ten_to(-20) * scale);
    }
}

TEST_CASE("conjugate symmetry off the axis") {
    MLParams p;
    p.a = Rational(4, 5);
    p.z = MLPoint{Rational(7), Rational(1, 3)};
    BigComplex up = eval_ml_series(p, 30);
    p.z.theta_over_pi = Rational(-1, 3);
    BigComplex down = eval_ml_series(p, 30);
    CHECK(close_complex(down, conj(up), 28));
}

TEST_CASE("doubling the target precision does not move the value") {
    Rational a(3, 5);
    BigReal v1 = ml_negative_axis(a, Rational(10), 25);
    BigReal v2 = ml_negative_axis(a, Rational(10), 50);
    CHECK(close_abs_rel(v1, v2, 24));
}

TEST_CASE("precision budget cap raises") {
    MLParams p;
    p.a = Rational(1, 5);
    p.z = MLPoint::negative_axis(Rational(1000));
    CHECK_THROWS_AS(eval_ml_series(p, 30), PrecisionBudgetExceeded);
}

TEST_CASE("parameter validation") {
    MLParams p;
    p.a = Rational(3, 2);
    p.z = MLPoint::negative_axis(Rational(2));
    CHECK_THROWS_AS(eval_ml_series(p, 30), std::invalid_argument);
    p.a = Rational(1, 2);
    CHECK_THROWS_AS(eval_ml_series(p, 8), std::invalid_argument);
}

TEST_CASE("half-order closed form: E_{1/2}(-x) = e^{x^2} erfc(x)") {
    for (long xi : {1L, 2L, 5L}) {
        BigReal lhs = ml_negative_axis(Rational(1, 2), Rational(xi), 35);
        PrecisionGuard guard(80);
        BigReal x(xi);
        BigReal rhs = exp(BigReal(x * x)) *
                      erfc_complex(BigComplex(BigReal(xi, 80U)), PrecisionContext(45, 10)).re;
        CHECK(abs(lhs - rhs) < ten_to(-32) * abs(rhs));
    }
}
