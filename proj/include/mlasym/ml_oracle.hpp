#pragma once

#include "mlasym/precision.hpp"

namespace mlasym {

// Exact polar description of the argument z = x * exp(i*pi*theta_over_pi).
// Carrying the modulus and phase as rationals lets every evaluation re-derive
// z at whatever working precision it escalates to.
struct MLPoint {
    Rational x;             // modulus >= 0
    Rational theta_over_pi; // arg(z) / pi

    static MLPoint negative_axis(Rational modulus) {
        return MLPoint{std::move(modulus), Rational(1)};
    }
};

// Parameters of the two-parameter function E_{a,b}(z); b defaults to 1.
struct MLParams {
    Rational a;
    Rational b = Rational(1);
    MLPoint z{Rational(0), Rational(0)};
};

// Decimal digits lost to alternating-series cancellation when summing
// E_a(-x): ceil(X log10 e) + 10 with X = x^(1/a).
long cancellation_digits(const Rational& a, const Rational& x);

// Direct-series evaluation of E_{a,b}(z), absolute error below
// 10^(-target_digits) * max(1, |E|). Working precision is raised internally
// to absorb cancellation; throws PrecisionBudgetExceeded past the cap.
BigComplex eval_ml_series(const MLParams& p, long target_digits);

struct MLBudget {
    static long max_working_digits;  // default 10000
};

// R_M(a; z) = z^{-M} E_{a,1-aM}(z) at z = -x, by direct series of the
// shifted function. Terms whose reciprocal gamma vanishes are skipped.
BigReal recursion_check(const Rational& a, const Rational& x, long M,
                        const PrecisionContext& ctx);

// E_a(-x) on the negative real axis (single-parameter case, real result).
BigReal ml_negative_axis(const Rational& a, const Rational& x, long target_digits);

}  // namespace mlasym
