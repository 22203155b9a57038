#include "mlasym/algebraic.hpp"

#include "mlasym/ml_oracle.hpp"
#include "mlasym/specfun.hpp"

namespace mlasym {

long TruncationBudget::max_index = 1000000;

namespace {

// x^(1/a); exact rational power when 1/a is an integer.
BigReal x_to_one_over_a(const Rational& a, const Rational& x, long digits10) {
    PrecisionGuard guard(digits10);
    Rational inv_a = Rational(1) / a;
    if (is_integer(inv_a)) {
        unsigned long n = numerator(inv_a).convert_to<unsigned long>();
        Rational xq = rational_pow(x, n);
        return to_real(xq, digits10);
    }
    BigReal xr = to_real(x, digits10);
    BigReal e = to_real(inv_a, digits10);
    BigReal r;
    r = pow(xr, e);
    return r;
}

}  // namespace

TruncationData optimal_truncation(const Rational& a, const Rational& x,
                                  const PrecisionContext& ctx) {
    if (!(a > 0) || a > 1) throw std::invalid_argument("optimal_truncation: need 0 < a <= 1");
    if (!(x > 0)) throw std::invalid_argument("optimal_truncation: need x > 0");
    const long work = ctx.working() + 12;
    PrecisionGuard guard(work);
    BigReal X = x_to_one_over_a(a, x, work);
    BigReal ratio;
    ratio = X / to_real(a, work);
    if (ratio > TruncationBudget::max_index)
        throw TruncationOverflow("optimal_truncation: index exceeds cap");
    long M = round_half_even(ratio);
    TruncationData t;
    t.M = M;
    BigReal nu;
    nu = to_real(a * M, work) - X;
    t.nu = at_precision(nu, ctx.working());
    t.X = at_precision(X, ctx.working());
    return t;
}

BigReal algebraic_term(const Rational& a, const Rational& x, long k,
                       const PrecisionContext& ctx) {
    if (k < 1) throw std::invalid_argument("algebraic_term: need k >= 1");
    const long work = ctx.working() + 10;
    PrecisionGuard guard(work);
    Rational ak = a * k;
    BigReal rg = recip_gamma(Rational(1) - ak, PrecisionContext(work, 5));
    if (rg.is_zero()) return BigReal(0);
    Rational xk = rational_pow(x, static_cast<unsigned long>(k));
    BigReal term;
    term = rg / to_real(xk, work);
    if (k % 2 == 0) term = -term;
    return at_precision(term, ctx.working());
}

BigReal algebraic_partial_sum(const Rational& a, const Rational& x, long M,
                              const PrecisionContext& ctx) {
    if (M < 0) throw std::invalid_argument("algebraic_partial_sum: need M >= 0");
    const long work = ctx.working() + 10;
    PrecisionGuard guard(work);
    const PrecisionContext term_ctx(work, 5);

    BigReal sum(0);
    BigReal xpow(1);
    BigReal xr = to_real(x, work);
    for (long k = 1; k <= M; ++k) {
        xpow *= xr;
        BigReal rg = recip_gamma(Rational(1) - a * k, term_ctx);
        if (rg.is_zero()) continue;
        BigReal term;
        term = rg / xpow;
        if (k % 2 == 0) term = -term;
        sum += term;
    }
    return at_precision(sum, ctx.working());
}

BigReal script_E_at(const Rational& a, const Rational& x, long M,
                    const PrecisionContext& ctx) {
    const long cancel = cancellation_digits(a, x);
    const long target = cancel + (ctx.digits > 15 ? ctx.digits : 15) + ctx.guard;
    BigReal oracle = ml_negative_axis(a, x, target);
    BigReal partial = algebraic_partial_sum(a, x, M, PrecisionContext(target, ctx.guard));
    PrecisionGuard guard(target + 10);
    BigReal r;
    r = oracle - partial;
    return at_precision(r, target);
}

BigReal script_E(const Rational& a, const Rational& x, const PrecisionContext& ctx) {
    TruncationData t = optimal_truncation(a, x, ctx);
    return script_E_at(a, x, t.M, ctx);
}

}  // namespace mlasym
