#include "mlasym/specfun.hpp"

#include <mpfr.h>

#include <mutex>
#include <vector>

namespace mlasym {

// ---------------------------------------------------------------------------
// Bernoulli numbers, exact
// ---------------------------------------------------------------------------

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_0, B_1, B_2, ... (all indices)

void extend_bernoulli(std::size_t upto) {
    if (g_bernoulli.empty()) {
        g_bernoulli.push_back(Rational(1));
        g_bernoulli.push_back(Rational(-1) / 2);
    }
    while (g_bernoulli.size() <= upto) {
        std::size_t m = g_bernoulli.size();
        if (m % 2 == 1) {
            g_bernoulli.push_back(Rational(0));
            continue;
        }
        // sum_{j=0}^{m} C(m+1, j) B_j = 0
        Rational acc(0);
        BigInt binom(1);  // C(m+1, 0)
        for (std::size_t j = 0; j < m; ++j) {
            if (!(j > 1 && j % 2 == 1))  // odd B_j vanish for j >= 3
                acc += Rational(binom) * g_bernoulli[j];
            binom = binom * BigInt(static_cast<unsigned long>(m + 1 - j)) /
                    BigInt(static_cast<unsigned long>(j + 1));
        }
        g_bernoulli.push_back(-acc / Rational(binom));  // binom == C(m+1, m) == m+1
    }
}

}  // namespace

Rational bernoulli_2k(unsigned k) {
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    extend_bernoulli(2 * k);
    return g_bernoulli[2 * k];
}

Rational pochhammer_half(unsigned k) {
    Rational p(1);
    for (unsigned j = 0; j < k; ++j) p *= Rational(2 * j + 1) / 2;
    return p;
}

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

namespace {

BigReal power_of_ten(long e, long digits10) {
    PrecisionGuard guard(digits10 > 20 ? digits10 : 20);
    return pow(BigReal(10), e);
}

// Stirling correction coefficients B_{2k}/(2k(2k-1)) converted once per
// working precision; per-thread so results are interleaving-independent.
struct StirlingCache {
    long digits = 0;
    std::vector<BigReal> coeffs;  // index k-1
    BigReal half_log_2pi;

    const BigReal& coeff(unsigned k, long work_digits) {
        if (digits != work_digits) {
            coeffs.clear();
            digits = work_digits;
            PrecisionGuard guard(work_digits);
            half_log_2pi = log(2 * pi_value(work_digits)) / 2;
        }
        while (coeffs.size() < k) {
            unsigned j = static_cast<unsigned>(coeffs.size()) + 1;
            coeffs.push_back(
                to_real(bernoulli_2k(j) / (Rational(2 * j) * (2 * j - 1)), work_digits));
        }
        return coeffs[k - 1];
    }
};

thread_local StirlingCache g_stirling;

// log Gamma(w) for w in the Stirling-valid region (w >= 0.4*W + 10 for W
// working digits); first omitted term below 10^(-W-6).
BigReal log_gamma_stirling(const BigReal& w, long work_digits) {
    PrecisionGuard guard(work_digits);
    (void)g_stirling.coeff(1, work_digits);  // prime the cache header
    BigReal acc = (w - BigReal(1) / 2) * log(w) - w + g_stirling.half_log_2pi;

    BigReal thresh = power_of_ten(-(work_digits + 2), work_digits);
    BigReal w2;
    w2 = w * w;
    BigReal wpow = 1 / w;  // w^(1-2k) running power
    for (unsigned k = 1;; ++k) {
        BigReal term;
        term = g_stirling.coeff(k, work_digits) * wpow;
        acc += term;
        if (abs(term) < thresh) break;
        if (k > 4000)
            throw PrecisionBudgetExceeded("log_gamma_stirling: series failed to converge");
        wpow /= w2;
    }
    return acc;
}

BigReal gamma_positive(const BigReal& y, long work_digits) {
    PrecisionGuard guard(work_digits);
    BigReal target = BigReal(work_digits) * 2 / 5 + 10;
    if (y >= target) return exp(log_gamma_stirling(y, work_digits));

    // Gamma(y) = Gamma(y + n) / (y (y+1) ... (y+n-1))
    long shift = floor_long(target - y) + 1;
    BigReal w = y + shift;
    BigReal prod(1);
    BigReal factor = y;
    for (long j = 0; j < shift; ++j) {
        prod *= factor;
        factor += 1;
    }
    return exp(log_gamma_stirling(w, work_digits)) / prod;
}

}  // namespace

BigReal gamma_hp(const BigReal& y, const PrecisionContext& ctx) {
    const long work = ctx.working() + 10;
    if (mpfr_integer_p(y.backend().data()) && y.sign() <= 0)
        throw GammaPole("gamma_hp: nonpositive integer argument");
    PrecisionGuard guard(work);
    BigReal yy = at_precision(y, work);
    BigReal result;
    if (yy < BigReal(1) / 2) {
        // Gamma(y) = pi / (sin(pi y) Gamma(1 - y))
        BigReal s = sinpi_real(yy);
        if (s.is_zero()) throw GammaPole("gamma_hp: argument at a pole");
        result = pi_value(work) / (s * gamma_positive(1 - yy, work));
    } else {
        result = gamma_positive(yy, work);
    }
    ensure_finite(result, "gamma_hp");
    return at_precision(result, ctx.working());
}

BigReal recip_gamma(const Rational& q, const PrecisionContext& ctx) {
    if (is_nonpositive_integer(q)) return BigReal(0);
    const long work = ctx.working() + 10;
    PrecisionGuard guard(work);
    BigReal result;
    if (q < Rational(1) / 2) {
        // 1/Gamma(q) = sin(pi q) Gamma(1 - q) / pi
        BigReal s = sinpi(q, work);
        result = s * gamma_hp(to_real(1 - q, work), ctx.with_digits(work)) / pi_value(work);
    } else {
        result = 1 / gamma_hp(to_real(q, work), ctx.with_digits(work));
    }
    return at_precision(result, ctx.working());
}

// ---------------------------------------------------------------------------
// erfc
// ---------------------------------------------------------------------------

namespace detail {

// Maclaurin branch: erfc(w) = 1 - (2/sqrt(pi)) sum (-1)^n w^(2n+1)/(n!(2n+1)).
// Escalates precision to absorb the cancellation between terms of size up to
// e^{|w|^2} and a result that can be as small as e^{-Re(w^2)}.
BigComplex erfc_series_branch(const BigComplex& w, long want_digits) {
    BigReal abs2;
    abs2 = norm2(w);
    BigReal rew2;
    rew2 = w.re * w.re - w.im * w.im;
    if (rew2.sign() < 0) rew2 = 0;
    double lost = ((abs2 + rew2) * BigReal("0.4342944819032518")).convert_to<double>();
    const long work = want_digits + static_cast<long>(lost) + 25;
    PrecisionGuard guard(work);

    BigComplex z(at_precision(w.re, work), at_precision(w.im, work));
    BigComplex mz2 = -(z * z);
    BigReal thresh;
    thresh = exp(-at_precision(rew2, work)) * power_of_ten(-(want_digits + 15), work);

    BigComplex p = z;  // (-1)^n w^(2n+1) / n!
    BigComplex sum;
    for (unsigned long n = 0;; ++n) {
        sum += p / BigReal(static_cast<long>(2 * n + 1));
        p = p * mz2 / BigReal(static_cast<long>(n + 1));
        if (abs(p) < thresh && n > 2) break;
        if (n > 2000000)
            throw PrecisionBudgetExceeded("erfc_series_branch: too many terms");
    }
    BigComplex erf_val = (2 / sqrt(pi_value(work))) * sum;
    BigComplex one(1);
    return one - erf_val;
}

// Laplace continued fraction, valid for Re w > 0; used when |arg w| <= pi/4
// and |w| is beyond the switch radius. Returns false if the iteration budget
// is exhausted before convergence.
bool erfc_cf_branch(const BigComplex& w, long want_digits, BigComplex& out) {
    const long work = want_digits + 20;
    PrecisionGuard guard(work);
    BigComplex z(at_precision(w.re, work), at_precision(w.im, work));

    BigReal tiny = power_of_ten(-(2 * work + 60), work);
    BigReal eps = power_of_ten(-(work - 2), work);

    // K = 1/(w + (1/2)/(w + (2/2)/(w + (3/2)/(w + ...))))
    BigComplex f(tiny, BigReal(0));
    BigComplex C = f;
    BigComplex D;
    const long max_iter = 600 + 60 * work;
    bool converged = false;
    for (long j = 1; j <= max_iter; ++j) {
        BigReal a_j = (j == 1) ? BigReal(1) : BigReal(j - 1) / 2;
        D = z + a_j * D;
        if (D.is_zero()) D = BigComplex(tiny, BigReal(0));
        C = z + BigComplex(a_j) / C;
        if (C.is_zero()) C = BigComplex(tiny, BigReal(0));
        D = inverse(D);
        BigComplex delta = C * D;
        f = f * delta;
        BigComplex dm1 = delta - BigComplex(1);
        if (abs(dm1) < eps) {
            converged = true;
            break;
        }
    }
    if (!converged) return false;
    BigComplex z2 = z * z;
    out = exp(-z2) * f / sqrt(pi_value(work));
    return true;
}

}  // namespace detail

BigComplex erfc_complex(const BigComplex& w, const PrecisionContext& ctx) {
    const long want = ctx.working();
    if (w.is_zero()) return BigComplex(1);
    if (w.re.sign() < 0) {
        // erfc(w) = 2 - erfc(-w)
        BigComplex other = erfc_complex(-w, ctx);
        PrecisionGuard guard(want + 10);
        BigComplex r = BigComplex(2) - other;
        ensure_finite(r, "erfc_complex");
        return r;
    }

    BigReal r_switch = BigReal(ctx.digits) / 4;
    if (r_switch < 4) r_switch = 4;

    BigComplex result;
    bool done = false;
    if (abs(w) >= r_switch && w.re >= abs(w.im)) {
        done = detail::erfc_cf_branch(w, want, result);
    }
    if (!done) result = detail::erfc_series_branch(w, want);
    ensure_finite(result, "erfc_complex");
    PrecisionGuard guard(want);
    return BigComplex(at_precision(result.re, want), at_precision(result.im, want));
}

}  // namespace mlasym
