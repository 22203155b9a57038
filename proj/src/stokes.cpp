#include "mlasym/stokes.hpp"

#include <cmath>

#include "mlasym/series.hpp"
#include "mlasym/specfun.hpp"

namespace mlasym {

BigReal Angle::value(long digits10) const {
    PrecisionGuard guard(digits10);
    if (times_pi) return to_real(coef, digits10) * pi_value(digits10);
    return to_real(coef, digits10);
}

namespace {

BigReal power_of_ten(long e, long digits10) {
    PrecisionGuard guard(digits10 > 20 ? digits10 : 20);
    return pow(BigReal(10), e);
}

// q(omega) = 2(1 + i omega - e^{i omega})/omega^2, analytic with q(0) = 1 and
// Re q >= 0 on omega in [-2 pi, 2 pi]; c = |omega| sqrt(q) is the Re >= 0
// root of (1/2)c^2 = 1 + i omega - e^{i omega}.
BigComplex q_factor(const BigReal& omega, const BigComplex& t0, long work) {
    PrecisionGuard guard(work);
    BigReal half(BigReal(1) / 2);
    if (abs(omega) < half) {
        // q = 2 sum_{j>=0} (i omega)^j / (j+2)!
        BigComplex iw(BigReal(0), omega);
        BigComplex term(1);  // (i omega)^j / (j+2)! * (j+2)!/2 bookkeeping below
        BigComplex acc;
        BigReal factorial(2);  // (j+2)!
        BigComplex p(1);       // (i omega)^j
        BigReal thresh = power_of_ten(-(work + 5), work);
        for (unsigned j = 0;; ++j) {
            BigComplex t = p / factorial;
            acc += t;
            if (abs(t) < thresh && j > 1) break;
            p = p * iw;
            factorial *= static_cast<long>(j + 3);
        }
        return BigComplex(2) * acc;
    }
    BigComplex num(1 - t0.re, omega - t0.im);  // 1 + i omega - e^{i omega}
    BigReal w2;
    w2 = omega * omega;
    return BigComplex(2) * num / w2;
}

}  // namespace

StokesGeometry make_geometry(const Angle& theta, const Rational& a,
                             const PrecisionContext& ctx) {
    if (!(a > 0) || a > 1) throw std::invalid_argument("make_geometry: need 0 < a <= 1");
    const long work = ctx.working() + 10;
    PrecisionGuard guard(work);

    StokesGeometry g;
    g.theta = theta;
    g.a = a;
    g.theta_value = theta.value(work);

    if (theta.times_pi) {
        g.omega_is_pi_rational = true;
        g.omega_over_pi = (theta.coef - a) / a;
        g.omega = to_real(g.omega_over_pi, work) * pi_value(work);
        g.t0 = unit_phase(g.omega_over_pi, work);
    } else {
        BigReal w;
        w = to_real(theta.coef, work) / to_real(a, work) - pi_value(work);
        g.omega = w;
        g.t0 = BigComplex(cos(w), sin(w));
    }

    const int osign = g.omega.sign();
    g.below_stokes = osign < 0;
    if (osign == 0) {
        g.c = BigComplex();
        g.u0 = BigComplex();
    } else {
        BigComplex root = sqrt(q_factor(g.omega, g.t0, work));
        BigReal mag = abs(g.omega);
        g.c = mag * root;  // Re c >= 0 branch
        // pole image: u0 = i * (omega sqrt(q)) = +-i c
        g.u0 = g.below_stokes ? -times_i(g.c) : times_i(g.c);
    }

    const long keep = ctx.working();
    g.theta_value = at_precision(g.theta_value, keep);
    g.omega = at_precision(g.omega, keep);
    g.t0 = BigComplex(at_precision(g.t0.re, keep), at_precision(g.t0.im, keep));
    g.c = BigComplex(at_precision(g.c.re, keep), at_precision(g.c.im, keep));
    g.u0 = BigComplex(at_precision(g.u0.re, keep), at_precision(g.u0.im, keep));
    return g;
}

// ---------------------------------------------------------------------------
// Coefficient engine
// ---------------------------------------------------------------------------

namespace {

// Escalation that absorbs the pole/saddle cancellation in Eq.-style
// coefficient extraction: ~ (2k+1) log10(1/|omega|) digits.
long omega_escalation(const BigReal& omega, long kmax) {
    if (omega.is_zero()) return 0;
    double w = std::fabs(omega.convert_to<double>());
    if (w >= 1.0) return 0;
    double esc = (2.0 * static_cast<double>(kmax) + 3.0) * std::log10(1.0 / w);
    return static_cast<long>(std::ceil(esc)) + 5;
}

}  // namespace

CoefficientSet f_coefficients(const Rational& a, const BigReal& nu,
                              const StokesGeometry& geom, long kmax,
                              const PrecisionContext& ctx) {
    if (kmax < 0) throw std::invalid_argument("f_coefficients: kmax >= 0");
    if (geom.c.is_zero())
        throw PoleTooCloseToSaddle("f_coefficients: c == 0 (theta on the Stokes line)");
    {
        double w = std::fabs(geom.omega.convert_to<double>());
        if (w < std::pow(10.0, -static_cast<double>(ctx.digits) / 4))
            throw PoleTooCloseToSaddle("f_coefficients: |omega| too small for direct extraction");
    }

    const long esc = omega_escalation(geom.omega, kmax);
    const long work = ctx.working() + esc + 10;
    PrecisionGuard guard(work);
    const PrecisionContext sctx(work, 5);

    // Rebuild the geometry pieces at the escalated precision from the exact
    // angle descriptor.
    StokesGeometry g = make_geometry(geom.theta, a, PrecisionContext(work, 5));

    const std::size_t order = static_cast<std::size_t>(2 * kmax + 6);
    const BigReal nu_w = at_precision(nu, work);
    const BigReal a_w = to_real(a, work);

    // u(s) = s sqrt(2 psi(1+s)/s^2), psi(t) = t - log t - 1.
    TruncatedSeries p(order);
    for (std::size_t j = 0; j < order; ++j) {
        BigReal cj = BigReal(2) / static_cast<long>(j + 2);
        p[j] = BigComplex((j % 2 == 0) ? cj : BigReal(-cj));
    }
    TruncatedSeries u_of_s = series_sqrt(p, sctx).mul_power(1);
    TruncatedSeries s_of_u = series_revert(u_of_s, sctx);  // t(u) = 1 + s(u)

    TruncatedSeries log_t =
        series_compose(TruncatedSeries::log1p_series(order, sctx), s_of_u, sctx);
    TruncatedSeries exp_ser = TruncatedSeries::exp_series(order, sctx);
    TruncatedSeries t_pow_anu =
        series_compose(exp_ser, log_t.scaled(BigComplex(a_w + nu_w)), sctx);
    TruncatedSeries t_pow_a = series_compose(exp_ser, log_t.scaled(BigComplex(a_w)), sctx);

    // T = t0^a, exact phase where available.
    BigComplex T;
    if (g.omega_is_pi_rational) {
        T = unit_phase(a * g.omega_over_pi, work);
    } else {
        BigReal aw;
        aw = a_w * g.omega;
        T = BigComplex(cos(aw), sin(aw));
    }

    TruncatedSeries denom = t_pow_a;
    denom[0] = denom[0] - T;

    TruncatedSeries u_over_s = series_div(TruncatedSeries::constant(BigComplex(1), order),
                                          s_of_u.div_power(1), sctx);
    TruncatedSeries f = series_mul(u_over_s, t_pow_anu, sctx);
    f = series_div(f, denom, sctx);

    // A = e^{i nu omega}/a
    BigReal nw;
    nw = nu_w * g.omega;
    BigComplex A = BigComplex(cos(nw), sin(nw)) / a_w;
    BigComplex inv_A = inverse(A);

    CoefficientSet out;
    out.kmax = kmax;
    out.nu = nu_w;
    out.A = A;
    BigComplex u0_inv = inverse(g.u0);
    BigComplex u0_pow = u0_inv;  // u0^{-(2k+1)}
    BigComplex u0_inv2 = u0_inv * u0_inv;
    const long keep = ctx.working();
    for (long k = 0; k <= kmax; ++k) {
        BigComplex alpha = f[static_cast<std::size_t>(2 * k)];
        BigComplex b = alpha * inv_A + u0_pow;
        out.alpha.push_back(BigComplex(at_precision(alpha.re, keep), at_precision(alpha.im, keep)));
        out.B.push_back(BigComplex(at_precision(b.re, keep), at_precision(b.im, keep)));
        u0_pow = u0_pow * u0_inv2;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Near-coalescence tables
// ---------------------------------------------------------------------------

namespace {

struct BPoly {
    bool imaginary;  // multiply the real polynomial value by i
    // evaluate P(a, nu)
    BigReal (*eval)(const BigReal& a, const BigReal& n);
};

BigReal p00(const BigReal& a, const BigReal& n) {
    BigReal r;
    r = a / 2 + n - BigReal(1) / 6;
    return r;
}
BigReal p01(const BigReal& a, const BigReal& n) {
    BigReal r;
    r = -(a * a + 6 * a * n + 6 * n * n) / 12;
    return r;
}
BigReal p02(const BigReal& a, const BigReal& n) {
    BigReal r;
    r = -(1 + 90 * n * (a + n) * (a + 2 * n)) / 1080;
    return r;
}
BigReal p03(const BigReal& a, const BigReal& n) {
    // sign pinned by the engine cross-check (cross-path convergence order test)
    BigReal a4 = a * a * a * a;
    BigReal s = a + n;
    BigReal r;
    r = -(1 + 18 * a4 - 540 * n * n * s * s) / 12960;
    return r;
}
BigReal p04(const BigReal& a, const BigReal& n) {
    BigReal a2 = a * a;
    BigReal a4 = a2 * a2;
    BigReal n2 = n * n;
    BigReal n3 = n2 * n;
    BigReal r;
    r = (-1 - 252 * a4 * n + 2520 * a2 * n3 + 3780 * a * n3 * n + 1512 * n3 * n2) / 181440;
    return r;
}
BigReal p20(const BigReal& a, const BigReal& n) {
    BigReal a2 = a * a;
    BigReal n2 = n * n;
    BigReal r;
    r = (-2 + 45 * a - 45 * a2 + 90 * n - 270 * a * n + 90 * a2 * n - 270 * n2 +
         270 * a * n2 + 180 * n2 * n) /
        1080;
    return r;
}
BigReal p21(const BigReal& a, const BigReal& n) {
    BigReal a2 = a * a;
    BigReal a4 = a2 * a2;
    BigReal n2 = n * n;
    BigReal n3 = n2 * n;
    BigReal r;
    r = (-1 - 10 * a2 + 6 * a4 - 60 * a * n + 120 * a2 * n - 60 * n2 + 360 * a * n2 -
         180 * a2 * n2 + 240 * n3 - 360 * a * n3 - 180 * n2 * n2) /
        1440;
    return r;
}
BigReal p22(const BigReal& a, const BigReal& n) {
    BigReal a2 = a * a;
    BigReal a4 = a2 * a2;
    BigReal n2 = n * n;
    BigReal n3 = n2 * n;
    BigReal n4 = n3 * n;
    BigReal r;
    r = (1 - 126 * a4 - 420 * a2 * n + 504 * a4 * n - 1260 * a * n2 + 3780 * a2 * n2 -
         840 * n3 + 7560 * a * n3 - 5040 * a2 * n3 + 3780 * n4 - 7560 * a * n4 -
         3024 * n4 * n) /
        60480;
    return r;
}
BigReal p40(const BigReal& a, const BigReal& n) {
    BigReal a2 = a * a;
    BigReal a4 = a2 * a2;
    BigReal n2 = n * n;
    BigReal n3 = n2 * n;
    BigReal n4 = n3 * n;
    BigReal r;
    r = (65 + 105 * a - 630 * a2 + 210 * a4 + 210 * n - 3780 * a * n + 4200 * a2 * n -
         252 * a4 * n - 3780 * n2 + 12600 * a * n2 - 6300 * a2 * n2 + 8400 * n3 -
         12600 * a * n3 + 2520 * a2 * n3 - 6300 * n4 + 3780 * a * n4 + 1512 * n4 * n) /
        181440;
    return r;
}
BigReal p41(const BigReal& a, const BigReal& n) {
    BigReal a2 = a * a;
    BigReal a4 = a2 * a2;
    BigReal a6 = a4 * a2;
    BigReal n2 = n * n;
    BigReal n3 = n2 * n;
    BigReal n4 = n3 * n;
    BigReal n5 = n4 * n;
    BigReal r;
    // sign pinned by the engine cross-check (cross-path convergence order test)
    r = -(2 + 105 * a2 - 1260 * a4 + 180 * a6 + 630 * a * n - 7560 * a2 * n +
          5040 * a4 * n + 630 * n2 - 22680 * a * n2 + 37800 * a2 * n2 - 3780 * a4 * n2 -
          15120 * n3 + 75600 * a * n3 - 50400 * a2 * n3 + 37800 * n4 - 75600 * a * n4 +
          18900 * a2 * n4 - 30240 * n5 + 22680 * a * n5 + 7560 * n5 * n) /
        1088640;
    return r;
}

// tables[k][r]; even r real, odd r imaginary
const BPoly kTables[3][5] = {
    {{false, p00}, {true, p01}, {false, p02}, {true, p03}, {false, p04}},
    {{false, p20}, {true, p21}, {false, p22}, {false, nullptr}, {false, nullptr}},
    {{false, p40}, {true, p41}, {false, nullptr}, {false, nullptr}, {false, nullptr}},
};
const long kTableOrder[3] = {4, 2, 1};

}  // namespace

std::vector<BigComplex> b_tables_near_one_at(const Rational& a, const BigReal& nu,
                                             const BigReal& omega, long kmax, long rmax,
                                             const PrecisionContext& ctx) {
    if (kmax < 0 || kmax > 2)
        throw TableOrderUnavailable("b_tables_near_one: only k <= 2 tabulated");
    if (rmax < 0) throw std::invalid_argument("b_tables_near_one: rmax >= 0");
    const long work = ctx.working() + 10;
    PrecisionGuard guard(work);
    const BigReal a_w = to_real(a, work);
    const BigReal n_w = at_precision(nu, work);
    const BigReal w = at_precision(omega, work);

    std::vector<BigComplex> out;
    for (long k = 0; k <= kmax; ++k) {
        long cap = rmax < kTableOrder[k] ? rmax : kTableOrder[k];
        BigComplex acc;
        BigReal wpow(1);
        for (long r = 0; r <= cap; ++r) {
            const BPoly& entry = kTables[k][r];
            BigReal v = entry.eval(a_w, n_w);
            BigReal scaled;
            scaled = v * wpow;
            if (entry.imaginary) {
                acc.im += scaled;
            } else {
                acc.re += scaled;
            }
            wpow *= w;
        }
        out.push_back(BigComplex(at_precision(acc.re, ctx.working()),
                                 at_precision(acc.im, ctx.working())));
    }
    return out;
}

std::vector<BigComplex> b_tables_near_one(const Rational& a, const BigReal& nu, long kmax,
                                          long rmax, const PrecisionContext& ctx) {
    const long work = ctx.working() + 10;
    BigReal omega = to_real((Rational(1) - a) / a, work) * pi_value(work);
    return b_tables_near_one_at(a, nu, omega, kmax, rmax, ctx);
}

// ---------------------------------------------------------------------------
// Expansion evaluators
// ---------------------------------------------------------------------------

namespace {

struct AssembledPieces {
    BigComplex erfc_term;
    std::vector<BigComplex> series_terms;
    BigReal est_error_scale;  // |prefactor| (X/2)^{-(kmax+1)} (1/2)_{kmax+1}
    long kmax_used = 0;
    bool tables_used = false;
};

// Shared assembly of the braces of (2.8)/(2.10): erfc term plus B-sum terms.
// `phase_over_pi` carries theta/a when theta is a pi-multiple; otherwise
// theta_over_a_radians is used.
AssembledPieces assemble_expansion(const Rational& a, const StokesGeometry& geom,
                                   const TruncationData& trunc, long kmax,
                                   const PrecisionContext& wctx) {
    const long work = wctx.working();
    PrecisionGuard guard(work);

    AssembledPieces out;

    // Coefficients: engine route unless the pole sits too close to the
    // saddle, then the near-coalescence tables (k <= 2).
    std::vector<BigComplex> B;
    long kmax_eff = kmax;
    try {
        CoefficientSet cs = f_coefficients(a, trunc.nu, geom, kmax + 1, wctx);
        B = cs.B;
    } catch (const PoleTooCloseToSaddle&) {
        kmax_eff = kmax < 2 ? kmax : 2;
        B = b_tables_near_one_at(a, trunc.nu, geom.omega, kmax_eff, 4, wctx);
        out.tables_used = true;
    }
    out.kmax_used = kmax_eff;

    const BigReal X = at_precision(trunc.X, work);
    const BigReal omega = at_precision(geom.omega, work);

    // z^{1/a} = X e^{i theta/a}
    BigComplex phase_dir;
    if (geom.theta.times_pi) {
        phase_dir = unit_phase(geom.theta.coef / a, work);
    } else {
        BigReal ang;
        ang = to_real(geom.theta.coef, work) / to_real(a, work);
        phase_dir = BigComplex(cos(ang), sin(ang));
    }
    BigComplex z_pow = exp(X * phase_dir);

    // erfc(c sqrt(X/2)) on the analytic branch: below the Stokes line the
    // series-branch c is -c, handled by erfc(-v) = 2 - erfc(v).
    BigComplex w_arg = sqrt(X / 2) * geom.c;
    BigComplex erfc_val = erfc_complex(w_arg, wctx);
    if (geom.below_stokes) erfc_val = BigComplex(2) - erfc_val;
    out.erfc_term = (BigReal(1) / 2) * z_pow * erfc_val;

    // -i e^{-X - i omega X} / sqrt(2 pi X)
    BigReal wX;
    wX = omega * X;
    BigComplex rot(cos(wX), -sin(wX));
    BigReal mag;
    mag = exp(-X) / sqrt(2 * pi_value(work) * X);
    BigComplex prefactor = -times_i(rot) * mag;

    BigReal half_X_inv;
    half_X_inv = 2 / X;  // (X/2)^{-1}
    BigReal xpow(1);
    for (long k = 0; k <= kmax_eff; ++k) {
        BigReal poch = to_real(pochhammer_half(static_cast<unsigned>(k)), work);
        BigComplex term = prefactor * B[static_cast<std::size_t>(k)] * (poch * xpow);
        out.series_terms.push_back(term);
        xpow *= half_X_inv;
    }
    // magnitude scale of the first omitted term
    BigReal poch_next = to_real(pochhammer_half(static_cast<unsigned>(kmax_eff + 1)), work);
    if (!out.tables_used) {
        // engine supplied B up to kmax+1
        BigReal next;
        next = abs(prefactor * B[static_cast<std::size_t>(kmax_eff + 1)]) * poch_next * xpow;
        out.est_error_scale = next;
    } else {
        BigReal next;
        next = abs(prefactor) * abs(B[static_cast<std::size_t>(kmax_eff)]) * poch_next * xpow;
        out.est_error_scale = next;
    }
    return out;
}

long scale_digits(const TruncationData& trunc) {
    double X = trunc.X.convert_to<double>();
    return static_cast<long>(std::ceil(std::log10(X + 10.0))) + 5;
}

}  // namespace

ExpansionReport exp_small_remainder(const Rational& a, const Rational& x, long kmax,
                                    const PrecisionContext& ctx) {
    if (!(a > 0) || a > 1)
        throw std::invalid_argument("exp_small_remainder: need 0 < a <= 1");
    if (kmax < 0) throw std::invalid_argument("exp_small_remainder: kmax >= 0");

    ExpansionReport rep;
    rep.validity_warning = !(3 * a > 1 && a < 1);

    // Escalation: omega-cancellation in the coefficients plus the magnitude
    // of the X-scale quantities.
    double omega_d = std::fabs(to_real((Rational(1) - a) / a, 30).convert_to<double>()) * M_PI;
    long esc = 0;
    if (omega_d > 0 && omega_d < 1)
        esc = static_cast<long>(std::ceil((2.0 * kmax + 5.0) * std::log10(1.0 / omega_d))) + 5;

    PrecisionContext probe(ctx.digits + 10, ctx.guard);
    TruncationData t0 = optimal_truncation(a, x, probe);
    const PrecisionContext wctx(ctx.digits + esc + scale_digits(t0) + 10, ctx.guard);

    rep.trunc = optimal_truncation(a, x, wctx);
    StokesGeometry geom = make_geometry(Angle::pi(), a, wctx);

    AssembledPieces pieces = assemble_expansion(a, geom, rep.trunc, kmax, wctx);
    rep.erfc_term = pieces.erfc_term;
    rep.series_terms = pieces.series_terms;
    rep.kmax_used = pieces.kmax_used;
    rep.near_one_tables_used = pieces.tables_used;

    PrecisionGuard guard(wctx.working());
    BigComplex brace = rep.erfc_term;
    for (const BigComplex& term : rep.series_terms) brace += term;
    BigReal two_over_a = 2 / to_real(a, wctx.working());
    BigReal val;
    val = two_over_a * brace.re;
    rep.value = BigComplex(at_precision(val, ctx.working()), BigReal(0));
    BigReal est;
    est = two_over_a * pieces.est_error_scale;
    rep.est_error = at_precision(est, 20);
    return rep;
}

ExpansionReport exp_small_general_theta(const Rational& a, const Rational& x,
                                        const Angle& theta, long kmax,
                                        const PrecisionContext& ctx) {
    if (!(a > 0) || a > 1)
        throw std::invalid_argument("exp_small_general_theta: need 0 < a <= 1");
    if (kmax < 0) throw std::invalid_argument("exp_small_general_theta: kmax >= 0");

    // Domain 0 < theta < 3 pi a (theta = pi a permitted: erfc(0) path).
    {
        const long check = 40;
        BigReal tv = theta.value(check);
        BigReal hi = 3 * to_real(a, check) * pi_value(check);
        if (!(tv > 0) || tv >= hi)
            throw ThetaOutOfSector("exp_small_general_theta: theta outside (0, 3 pi a)");
    }

    ExpansionReport rep;
    rep.validity_warning = false;

    PrecisionContext probe(ctx.digits + 10, ctx.guard);
    TruncationData t0 = optimal_truncation(a, x, probe);

    StokesGeometry geom_probe = make_geometry(theta, a, probe);
    double omega_d = std::fabs(geom_probe.omega.convert_to<double>());
    long esc = 0;
    if (omega_d > 0 && omega_d < 1)
        esc = static_cast<long>(std::ceil((2.0 * kmax + 5.0) * std::log10(1.0 / omega_d))) + 5;
    const PrecisionContext wctx(ctx.digits + esc + scale_digits(t0) + 10, ctx.guard);

    rep.trunc = optimal_truncation(a, x, wctx);
    StokesGeometry geom = make_geometry(theta, a, wctx);

    if (geom.omega.is_zero()) {
        // Stokes line: c = 0, erfc(0) = 1; coefficients from the tables.
        PrecisionGuard guard(wctx.working());
        const long work = wctx.working();
        std::vector<BigComplex> B =
            b_tables_near_one_at(a, rep.trunc.nu, BigReal(0), kmax < 2 ? kmax : 2, 4, wctx);
        rep.near_one_tables_used = true;
        rep.kmax_used = kmax < 2 ? kmax : 2;

        const BigReal X = at_precision(rep.trunc.X, work);
        BigComplex phase_dir;
        if (theta.times_pi) {
            phase_dir = unit_phase(theta.coef / a, work);
        } else {
            BigReal ang;
            ang = to_real(theta.coef, work) / to_real(a, work);
            phase_dir = BigComplex(cos(ang), sin(ang));
        }
        rep.erfc_term = (BigReal(1) / 2) * exp(X * phase_dir);

        BigReal mag;
        mag = exp(-X) / sqrt(2 * pi_value(work) * X);
        BigComplex prefactor(BigReal(0), -mag);
        BigReal half_X_inv;
        half_X_inv = 2 / X;
        BigReal xpow(1);
        for (long k = 0; k <= rep.kmax_used; ++k) {
            BigReal poch = to_real(pochhammer_half(static_cast<unsigned>(k)), work);
            rep.series_terms.push_back(prefactor * B[static_cast<std::size_t>(k)] *
                                       (poch * xpow));
            xpow *= half_X_inv;
        }
        BigReal poch_next =
            to_real(pochhammer_half(static_cast<unsigned>(rep.kmax_used + 1)), work);
        rep.est_error = at_precision(
            BigReal(mag * abs(B[static_cast<std::size_t>(rep.kmax_used)]) * poch_next * xpow),
            20);
    } else {
        AssembledPieces pieces = assemble_expansion(a, geom, rep.trunc, kmax, wctx);
        rep.erfc_term = pieces.erfc_term;
        rep.series_terms = pieces.series_terms;
        rep.kmax_used = pieces.kmax_used;
        rep.near_one_tables_used = pieces.tables_used;
        rep.est_error = at_precision(pieces.est_error_scale, 20);
    }

    PrecisionGuard guard(wctx.working());
    BigComplex brace = rep.erfc_term;
    for (const BigComplex& term : rep.series_terms) brace += term;
    BigReal inv_a;
    inv_a = 1 / to_real(a, wctx.working());
    BigComplex val = inv_a * brace;
    rep.value = BigComplex(at_precision(val.re, ctx.working()), at_precision(val.im, ctx.working()));
    {
        BigReal est;
        est = rep.est_error * inv_a;
        rep.est_error = at_precision(est, 20);
    }
    return rep;
}

LeadingOrderEstimate leading_order_estimate(const Rational& a, const Rational& x,
                                            const PrecisionContext& ctx) {
    if (!(a > 0) || a > 1)
        throw std::invalid_argument("leading_order_estimate: need 0 < a <= 1");
    const long work = ctx.working() + 10;
    PrecisionGuard guard(work);

    TruncationData t = optimal_truncation(a, x, PrecisionContext(work, 5));
    const BigReal X = at_precision(t.X, work);
    const BigReal nu = at_precision(t.nu, work);
    const BigReal a_w = to_real(a, work);
    const Rational omega_over_pi = (Rational(1) - a) / a;
    const BigReal omega = to_real(omega_over_pi, work) * pi_value(work);

    LeadingOrderEstimate out;
    {
        BigReal wx;
        wx = omega * X;
        out.omega_x_small = wx < 1;
    }

    // cos(pi/a) via the exact phase
    BigReal cos_pi_over_a = cospi(Rational(1) / a, work);
    BigReal sqrt_2piX = sqrt(2 * pi_value(work) * X);

    BigReal first;
    first = exp(X * cos_pi_over_a) * (1 - 2 * omega * X / sqrt_2piX) / a_w;
    BigReal bracket;
    bracket = (a_w / 2 + nu - BigReal(1) / 6) * X + a_w * a_w / 12 + nu * (a_w + nu) / 2;
    BigReal second;
    second = omega * exp(-X) / (a_w * sqrt_2piX) * bracket;
    BigReal val;
    val = first - second;
    out.value = at_precision(val, ctx.working());
    return out;
}

}  // namespace mlasym
