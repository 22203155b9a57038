#include "mlasym/ml_oracle.hpp"

#include <cmath>

#include "mlasym/specfun.hpp"

namespace mlasym {

long MLBudget::max_working_digits = 10000;

namespace {

// log10(x^(1/a)) in double precision, for budgeting only.
double estimate_log10_X(const Rational& a, const Rational& x) {
    double xd = to_real(x, 30).convert_to<double>();
    double ad = to_real(a, 30).convert_to<double>();
    if (xd <= 0) return 0;
    return std::log10(xd) / ad;
}

double estimate_X(const Rational& a, const Rational& x) {
    return std::pow(10.0, estimate_log10_X(a, x));
}

BigReal power_of_ten(long e, long digits10) {
    PrecisionGuard guard(digits10 > 20 ? digits10 : 20);
    return pow(BigReal(10), e);
}

}  // namespace

long cancellation_digits(const Rational& a, const Rational& x) {
    if (!(a > 0) || !(x > 0)) throw std::invalid_argument("cancellation_digits: need a > 0, x > 0");
    double X = estimate_X(a, x);
    return static_cast<long>(std::ceil(X * 0.43429448190325176)) + 10;
}

BigComplex eval_ml_series(const MLParams& p, long target_digits) {
    if (!(p.a > 0) || p.a > 1)
        throw std::invalid_argument("eval_ml_series: need 0 < a <= 1");
    if (p.z.x < 0) throw std::invalid_argument("eval_ml_series: negative modulus");
    if (target_digits < 16) throw std::invalid_argument("eval_ml_series: target_digits >= 16");

    const double X = estimate_X(p.a, p.z.x);
    const long cancel = p.z.x == 0 ? 0
                                   : static_cast<long>(std::ceil(X * 0.43429448190325176)) + 10;
    const long work = target_digits + cancel + 15;
    if (work > MLBudget::max_working_digits)
        throw PrecisionBudgetExceeded("eval_ml_series: required working digits " +
                                      std::to_string(work) + " exceed cap");
    PrecisionGuard guard(work);

    if (p.z.x == 0) {
        BigReal lead = recip_gamma(p.b, PrecisionContext(work, 5));
        return BigComplex(lead);
    }

    const BigReal mod = to_real(p.z.x, work);
    const BigComplex z = mod * unit_phase(p.z.theta_over_pi, work);
    const bool real_axis = z.im.is_zero();

    // Successive-term ratio is |z| Gamma(an+b)/Gamma(an+b+a) <= |z|/(an+b-1)^a.
    // Once an+b-1 > (|z|/r0)^(1/a) the tail is geometrically bounded by
    // term * r0/(1-r0), so we stop when term < thresh * (1-r0)/r0.
    const double r0 = 0.8;
    const double ratio_cut = 1.0 + std::pow(to_real(p.z.x, 30).convert_to<double>() / r0,
                                            1.0 / to_real(p.a, 30).convert_to<double>());
    const BigReal thresh = power_of_ten(-(work - 5), work) / 4;
    const PrecisionContext gamma_ctx(work, 5);

    BigComplex sum;
    BigComplex zp(1);  // z^n
    Rational arg = p.b;
    double arg_d = to_real(arg, 30).convert_to<double>();
    const double a_d = to_real(p.a, 30).convert_to<double>();
    for (unsigned long n = 0;; ++n) {
        BigReal rg = recip_gamma(arg, gamma_ctx);
        if (!rg.is_zero()) {
            if (real_axis) {
                sum.re += zp.re * rg;
            } else {
                sum += zp * rg;
            }
        }
        if (arg_d > ratio_cut && !rg.is_zero()) {
            BigReal tmag = abs(zp) * abs(rg);
            if (tmag < thresh) break;
        }
        zp = zp * z;
        arg += p.a;
        arg_d += a_d;
        if (n > 50000000UL)
            throw PrecisionBudgetExceeded("eval_ml_series: term budget exhausted");
    }
    return BigComplex(at_precision(sum.re, target_digits + 10),
                      at_precision(sum.im, target_digits + 10));
}

BigReal recursion_check(const Rational& a, const Rational& x, long M,
                        const PrecisionContext& ctx) {
    if (M < 0) throw std::invalid_argument("recursion_check: M >= 0");
    // |E_{a,1-aM}(-x)| ~ x^M e^{-X}; raise the target so the returned
    // remainder still carries ctx.digits relative digits.
    double log10_scale = 0;
    if (x > 0) {
        double X = estimate_X(a, x);
        double log10_x = std::log10(to_real(x, 30).convert_to<double>());
        log10_scale = static_cast<double>(M) * log10_x - X * 0.43429448190325176;
    }
    long target = ctx.digits + 20;
    if (log10_scale < 0) target += static_cast<long>(std::ceil(-log10_scale));

    MLParams p;
    p.a = a;
    p.b = Rational(1) - a * M;
    p.z = MLPoint::negative_axis(x);
    BigComplex e = eval_ml_series(p, target);

    const long work = target + 10;
    PrecisionGuard guard(work);
    // z^{-M} = (-1)^M x^{-M}
    BigReal xr = to_real(x, work);
    BigReal scale = pow(xr, -M);
    BigReal r;
    r = e.re * scale;
    if (M % 2 != 0) r = -r;
    return at_precision(r, ctx.working());
}

BigReal ml_negative_axis(const Rational& a, const Rational& x, long target_digits) {
    MLParams p;
    p.a = a;
    p.z = MLPoint::negative_axis(x);
    return eval_ml_series(p, target_digits).re;
}

}  // namespace mlasym
