#pragma once

#include <vector>

#include "mlasym/algebraic.hpp"
#include "mlasym/precision.hpp"

namespace mlasym {

// Phase carried exactly: coef*pi when times_pi, else coef radians. Exact
// carriers keep the phase reconstructible at any working precision.
struct Angle {
    Rational coef;
    bool times_pi = true;

    static Angle pi() { return Angle{Rational(1), true}; }
    static Angle pi_multiple(Rational q) { return Angle{std::move(q), true}; }
    static Angle radians(Rational r) { return Angle{std::move(r), false}; }

    BigReal value(long digits10) const;
};

// Geometry of the pole/saddle collision: omega = (theta - pi a)/a, pole
// t0 = e^{i omega}, separation c with (1/2)c^2 = 1 + i omega - e^{i omega}.
// c stores the root with Re c >= 0 (|arg c| < pi/4 strictly inside
// 0 < theta < 3 pi a); u0 is the actual pole image in the u-plane,
// i*c above the Stokes line and -i*c below it.
struct StokesGeometry {
    Angle theta;
    Rational a;
    BigReal theta_value;
    BigReal omega;
    bool omega_is_pi_rational = false;
    Rational omega_over_pi;  // valid when omega_is_pi_rational
    BigComplex t0;
    BigComplex c;
    BigComplex u0;
    bool below_stokes = false;  // theta < pi a
};

StokesGeometry make_geometry(const Angle& theta, const Rational& a,
                             const PrecisionContext& ctx);

// Maclaurin data for f(u) = u t^{a+nu} / ((t-1)(t^a - t0^a)) around the
// saddle: even coefficients alpha_{2k} and the pole-subtracted B_{2k}.
struct CoefficientSet {
    std::vector<BigComplex> alpha;  // alpha_{2k}, k = 0..kmax
    std::vector<BigComplex> B;      // B_{2k},     k = 0..kmax
    BigComplex A;                   // e^{i nu omega}/a
    BigReal nu;
    long kmax = 0;
};

CoefficientSet f_coefficients(const Rational& a, const BigReal& nu,
                              const StokesGeometry& geom, long kmax,
                              const PrecisionContext& ctx);

// B_{2k} from the hardcoded near-coalescence polynomials, summed in powers
// of omega: kmax <= 2 (tables carry r <= 4, 2, 1 respectively). The omega
// used is the geometry value for theta = pi unless one is supplied.
std::vector<BigComplex> b_tables_near_one(const Rational& a, const BigReal& nu,
                                          long kmax, long rmax,
                                          const PrecisionContext& ctx);
std::vector<BigComplex> b_tables_near_one_at(const Rational& a, const BigReal& nu,
                                             const BigReal& omega, long kmax, long rmax,
                                             const PrecisionContext& ctx);

// Evaluated exponentially small contribution with its per-term breakdown.
// For the negative-axis evaluator the value is real (imaginary part exactly
// zero); the general-theta evaluator returns the one-sided complex J.
struct ExpansionReport {
    BigComplex value;
    BigComplex erfc_term;                  // (1/2) exp(z^{1/a}) erfc(c sqrt(X/2))
    std::vector<BigComplex> series_terms;  // -i e^{-X - i omega X}/sqrt(2 pi X) B_{2k} (1/2)_k (X/2)^{-k}
    long kmax_used = 0;
    TruncationData trunc;
    BigReal est_error;
    bool validity_warning = false;
    bool near_one_tables_used = false;

    BigReal real_value() const { return value.re; }
};

// Negative-axis evaluator: R_M(a; -x),
//   (2/a) Re{ erfc_term + sum_k series_terms[k] }.
// Guaranteed sector is 1/3 < a < 1; outside it the value is still computed
// and validity_warning is set (a = 1 degenerates to e^{-x} exactly).
ExpansionReport exp_small_remainder(const Rational& a, const Rational& x, long kmax,
                                    const PrecisionContext& ctx);

// Upper-cut contribution J for 0 < theta < 3 pi a,
//   (1/a) { erfc_term + sum_k series_terms[k] };
// at theta = pi, value + conj(value) equals the remainder above.
ExpansionReport exp_small_general_theta(const Rational& a, const Rational& x,
                                        const Angle& theta, long kmax,
                                        const PrecisionContext& ctx);

struct LeadingOrderEstimate {
    BigReal value;
    bool omega_x_small = true;  // the omega*X << 1 regime assumption held
};

// Two-term closed-form estimate of R_M(a; -x) for a near 1; exactly e^{-x}
// at a = 1.
LeadingOrderEstimate leading_order_estimate(const Rational& a, const Rational& x,
                                            const PrecisionContext& ctx);

}  // namespace mlasym
