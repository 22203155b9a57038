#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mlasym/series.hpp"
#include "test_util.hpp"

using namespace mlasym;
using namespace mlasym_test;

namespace {

const PrecisionContext ctx(40, 10);

TruncatedSeries from_doubles(std::initializer_list<double> vals) {
    PrecisionGuard guard(60);
    std::vector<BigComplex> c;
    for (double v : vals) c.push_back(BigComplex(BigReal(v)));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries random_series(Rng& rng, std::size_t order, bool zero_const, bool unit_linear) {
    PrecisionGuard guard(60);
    std::vector<BigComplex> c;
    for (std::size_t r = 0; r < order; ++r)
        c.push_back(BigComplex(BigReal(rng.uniform(-1.0, 1.0)), BigReal(rng.uniform(-1.0, 1.0))));
    if (zero_const) c[0] = BigComplex();
    if (unit_linear) c[1] = BigComplex(BigReal(1, 60U), BigReal(rng.uniform(-0.2, 0.2)));
    return TruncatedSeries(std::move(c));
}

// d/du, for the composition oracle
TruncatedSeries derivative(const TruncatedSeries& s) {
    TruncatedSeries d(s.order());
    for (std::size_t r = 0; r + 1 < s.order(); ++r)
        d[r] = s[r + 1] * BigReal(static_cast<long>(r + 1));
    return d;
}

}  // namespace

TEST_CASE("difference of squares at order 3") {
    TruncatedSeries lhs = from_doubles({1, 1, 0});
    TruncatedSeries rhs = from_doubles({1, -1, 0});
    TruncatedSeries prod = series_arith(lhs, rhs, SeriesOp::mul, ctx);
    CHECK(close_complex(prod[0], BigComplex(1), 38));
    CHECK(abs(prod[1]) < ten_to(-38));
    CHECK(close_complex(prod[2], BigComplex(-1), 38));
}

TEST_CASE("s/s is the constant one") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries s = random_series(rng, 8, false, false);
        TruncatedSeries q = series_arith(s, s, SeriesOp::div, ctx);
        CHECK(close_complex(q[0], BigComplex(1), 36));
        for (std::size_t r = 1; r < q.order(); ++r) CHECK(abs(q[r]) < ten_to(-34));
    }
}

TEST_CASE("geometric series from division") {
    TruncatedSeries one = from_doubles({1, 0, 0, 0});
    TruncatedSeries den = from_doubles({1, -1, 0, 0});
    TruncatedSeries g = series_div(one, den, ctx);
    for (std::size_t r = 0; r < 4; ++r) CHECK(close_complex(g[r], BigComplex(1), 38));
}

TEST_CASE("division by a singular series throws") {
    TruncatedSeries one = from_doubles({1, 0, 0});
    TruncatedSeries sing = from_doubles({0, 1, 0});
    CHECK_THROWS_AS(series_div(one, sing, ctx), DivisionBySingularSeries);
}

TEST_CASE("series_arith rejects mismatched orders") {
    CHECK_THROWS_AS(series_add(from_doubles({1, 2}), from_doubles({1, 2, 3}), ctx),
                    std::invalid_argument);
}

TEST_CASE("compose: exp series with zero inner is the constant one") {
    TruncatedSeries ex = TruncatedSeries::exp_series(6, ctx);
    TruncatedSeries zero = TruncatedSeries::zero(6);
    TruncatedSeries r = series_compose(ex, zero, ctx);
    CHECK(close_complex(r[0], BigComplex(1), 38));
    for (std::size_t k = 1; k < 6; ++k) CHECK(abs(r[k]) < ten_to(-38));
}

TEST_CASE("compose: identity outer returns the inner series") {
    Rng rng(5);
    TruncatedSeries s = random_series(rng, 7, true, false);
    TruncatedSeries r = series_compose(TruncatedSeries::identity(7), s, ctx);
    CHECK(series_max_deviation(r, s) < ten_to(-36));
}

TEST_CASE("compose requires a vanishing inner constant term") {
    TruncatedSeries ex = TruncatedSeries::exp_series(5, ctx);
    CHECK_THROWS_AS(series_compose(ex, from_doubles({1, 1, 0, 0, 0}), ctx),
                    CompositionRequiresZeroConstantTerm);
}

TEST_CASE("log composition matches the differentiation oracle") {
    // log(1+s)' * (1+s) == s' as truncated series, for random s with s(0)=0
    Rng rng(17);
    for (int trial = 0; trial < 6; ++trial) {
        TruncatedSeries s = random_series(rng, 10, true, false);
        TruncatedSeries lg =
            series_compose(TruncatedSeries::log1p_series(10, ctx), s, ctx);
        TruncatedSeries one_plus_s = s;
        one_plus_s[0] = BigComplex(1);
        TruncatedSeries lhs = series_mul(derivative(lg), one_plus_s, ctx);
        TruncatedSeries rhs = derivative(s);
        // the top derivative coefficient is truncation noise; compare below it
        BigReal worst(0);
        for (std::size_t r = 0; r + 2 < 10; ++r) {
            BigReal d = abs(lhs[r] - rhs[r]);
            if (d > worst) worst = d;
        }
        CHECK(worst < ten_to(-34));
    }
}

TEST_CASE("reversion reproduces the printed saddle-map coefficients") {
    // (1/2)u^2 = t - log t - 1 inverted about t = 1:
    // t(u) = 1 + u + u^2/3 + u^3/36 - u^4/270 + u^5/4320 + ...
    const PrecisionContext sctx(50, 10);
    const std::size_t n = 10;
    PrecisionGuard guard(70);
    TruncatedSeries p(n);
    for (std::size_t j = 0; j < n; ++j) {
        BigReal cj = BigReal(2) / static_cast<long>(j + 2);
        p[j] = BigComplex((j % 2 == 0) ? cj : BigReal(-cj));
    }
    TruncatedSeries u_of_s = series_sqrt(p, sctx).mul_power(1);
    TruncatedSeries t_minus_1 = series_revert(u_of_s, sctx);

    const Rational expected[6] = {Rational(0),       Rational(1),        Rational(1, 3),
                                  Rational(1, 36),   Rational(-1, 270),  Rational(1, 4320)};
    for (std::size_t r = 0; r < 6; ++r) {
        CHECK(abs(t_minus_1[r] - BigComplex(to_real(expected[r], 70))) < ten_to(-48));
    }
}

TEST_CASE("revert of the identity is the identity") {
    TruncatedSeries id = TruncatedSeries::identity(8);
    TruncatedSeries r = series_revert(id, ctx);
    CHECK(series_max_deviation(r, id) < ten_to(-38));
}

TEST_CASE("reversion round-trips (randomized)") {
    Rng rng(23);
    TruncatedSeries id = TruncatedSeries::identity(9);
    for (int trial = 0; trial < 12; ++trial) {
        TruncatedSeries s = random_series(rng, 9, true, true);
        TruncatedSeries r = series_revert(s, ctx);
        // compose(s, r) == u
        CHECK(series_max_deviation(series_compose(s, r, ctx), id) < ten_to(-34));
        // revert(revert(s)) == s
        CHECK(series_max_deviation(series_revert(r, ctx), s) < ten_to(-32));
    }
}

TEST_CASE("reversion preconditions") {
    CHECK_THROWS_AS(series_revert(from_doubles({1, 1, 0}), ctx), NotRevertible);
    CHECK_THROWS_AS(series_revert(from_doubles({0, 0, 1}), ctx), NotRevertible);
}

TEST_CASE("precision monotonicity") {
    // recomputing with digits+20 moves no coefficient by more than 10^-digits
    Rng rng(31);
    TruncatedSeries a = random_series(rng, 8, false, false);
    TruncatedSeries b = random_series(rng, 8, true, true);
    PrecisionContext lo(30, 10), hi(50, 10);
    CHECK(series_max_deviation(series_mul(a, b, lo), series_mul(a, b, hi)) < ten_to(-30));
    CHECK(series_max_deviation(series_div(a, TruncatedSeries::exp_series(8, lo), lo),
                               series_div(a, TruncatedSeries::exp_series(8, hi), hi)) <
          ten_to(-30));
    CHECK(series_max_deviation(series_revert(b, lo), series_revert(b, hi)) < ten_to(-30));
}
