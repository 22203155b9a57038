#include "mlasym/series.hpp"

#include <algorithm>

namespace mlasym {

TruncatedSeries TruncatedSeries::constant(const BigComplex& c, std::size_t order) {
    TruncatedSeries s(order);
    if (order > 0) s[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order > 1) s[1] = BigComplex(1);
    return s;
}

TruncatedSeries TruncatedSeries::exp_series(std::size_t order, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working());
    TruncatedSeries s(order);
    BigReal factorial(1);
    for (std::size_t r = 0; r < order; ++r) {
        if (r > 0) factorial *= static_cast<long>(r);
        s[r] = BigComplex(1 / factorial);
    }
    return s;
}

TruncatedSeries TruncatedSeries::log1p_series(std::size_t order, const PrecisionContext& ctx) {
    PrecisionGuard guard(ctx.working());
    TruncatedSeries s(order);
    for (std::size_t r = 1; r < order; ++r) {
        BigReal c = BigReal(1) / static_cast<long>(r);
        s[r] = BigComplex((r % 2 == 0) ? BigReal(-c) : c);
    }
    return s;
}

TruncatedSeries TruncatedSeries::scaled(const BigComplex& s) const {
    TruncatedSeries out(order());
    for (std::size_t r = 0; r < order(); ++r) out[r] = coeffs_[r] * s;
    return out;
}

TruncatedSeries TruncatedSeries::mul_power(std::size_t k) const {
    TruncatedSeries out(order());
    for (std::size_t r = k; r < order(); ++r) out[r] = coeffs_[r - k];
    return out;
}

TruncatedSeries TruncatedSeries::div_power(std::size_t k) const {
    TruncatedSeries out(order());
    for (std::size_t r = 0; r + k < order(); ++r) out[r] = coeffs_[r + k];
    return out;
}

namespace {

void require_equal_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series_arith: operands must have equal order");
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b,
                           const PrecisionContext& ctx) {
    require_equal_order(a, b);
    PrecisionGuard guard(ctx.working());
    TruncatedSeries out(a.order());
    for (std::size_t r = 0; r < a.order(); ++r) out[r] = a[r] + b[r];
    return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b,
                           const PrecisionContext& ctx) {
    require_equal_order(a, b);
    PrecisionGuard guard(ctx.working());
    TruncatedSeries out(a.order());
    for (std::size_t r = 0; r < a.order(); ++r) out[r] = a[r] - b[r];
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                           const PrecisionContext& ctx) {
    require_equal_order(a, b);
    PrecisionGuard guard(ctx.working());
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    for (std::size_t r = 0; r < n; ++r) {
        BigComplex acc;
        for (std::size_t j = 0; j <= r; ++j) acc += a[j] * b[r - j];
        out[r] = acc;
    }
    return out;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b,
                           const PrecisionContext& ctx) {
    require_equal_order(a, b);
    if (b.order() == 0 || b[0].is_zero())
        throw DivisionBySingularSeries("series_div: divisor has zero constant term");
    PrecisionGuard guard(ctx.working());
    const std::size_t n = a.order();
    TruncatedSeries out(n);
    for (std::size_t r = 0; r < n; ++r) {
        BigComplex acc = a[r];
        for (std::size_t j = 0; j < r; ++j) acc -= out[j] * b[r - j];
        out[r] = acc / b[0];
    }
    return out;
}

TruncatedSeries series_arith(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                             SeriesOp op, const PrecisionContext& ctx) {
    switch (op) {
        case SeriesOp::add: return series_add(lhs, rhs, ctx);
        case SeriesOp::sub: return series_sub(lhs, rhs, ctx);
        case SeriesOp::mul: return series_mul(lhs, rhs, ctx);
        case SeriesOp::div: return series_div(lhs, rhs, ctx);
    }
    throw std::logic_error("series_arith: bad op");
}

TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner,
                               const PrecisionContext& ctx) {
    if (inner.order() > 0 && !inner[0].is_zero())
        throw CompositionRequiresZeroConstantTerm(
            "series_compose: inner constant term must vanish");
    PrecisionGuard guard(ctx.working());
    const std::size_t n = outer.order();
    // Horner in the inner series.
    TruncatedSeries acc(n);
    for (std::size_t idx = n; idx-- > 0;) {
        acc = series_mul(acc, inner, ctx);
        acc[0] += outer[idx];
    }
    return acc;
}

TruncatedSeries series_revert(const TruncatedSeries& s, const PrecisionContext& ctx) {
    const std::size_t n = s.order();
    if (n == 0 || !s[0].is_zero() || n < 2 || s[1].is_zero())
        throw NotRevertible("series_revert: need s[0] == 0 and s[1] != 0");
    PrecisionGuard guard(ctx.working());

    // Derivative of s, for the Newton update.
    TruncatedSeries ds(n);
    for (std::size_t r = 0; r + 1 < n; ++r)
        ds[r] = s[r + 1] * BigReal(static_cast<long>(r + 1));

    TruncatedSeries id = TruncatedSeries::identity(n);
    TruncatedSeries r = id.scaled(inverse(s[1]));  // first-order seed

    // Each step doubles the number of correct coefficients.
    std::size_t steps = 1;
    for (std::size_t span = 1; span < n; span *= 2) ++steps;
    for (std::size_t it = 0; it < steps + 1; ++it) {
        TruncatedSeries comp = series_compose(s, r, ctx);   // s(r(u))
        TruncatedSeries resid = series_sub(comp, id, ctx);  // s(r(u)) - u
        TruncatedSeries slope = series_compose(ds, r, ctx); // s'(r(u))
        TruncatedSeries delta = series_div(resid, slope, ctx);
        r = series_sub(r, delta, ctx);
    }
    return r;
}

TruncatedSeries series_sqrt(const TruncatedSeries& s, const PrecisionContext& ctx) {
    if (s.order() == 0 || s[0].is_zero())
        throw DivisionBySingularSeries("series_sqrt: zero constant term");
    PrecisionGuard guard(ctx.working());
    const std::size_t n = s.order();
    TruncatedSeries out(n);
    out[0] = sqrt(s[0]);
    BigComplex two_q0 = out[0] + out[0];
    for (std::size_t r = 1; r < n; ++r) {
        BigComplex acc = s[r];
        for (std::size_t j = 1; j < r; ++j) acc -= out[j] * out[r - j];
        out[r] = acc / two_q0;
    }
    return out;
}

BigReal series_max_deviation(const TruncatedSeries& a, const TruncatedSeries& b) {
    BigReal worst(0);
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t r = 0; r < n; ++r) {
        BigReal d = abs(a[r] - b[r]);
        if (d > worst) worst = d;
    }
    return worst;
}

}  // namespace mlasym
