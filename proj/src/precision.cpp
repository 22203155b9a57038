#include "mlasym/precision.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace mlasym {

BigReal at_precision(const BigReal& x, long digits10) {
    return BigReal(x, static_cast<unsigned>(digits10));
}

BigReal to_real(const Rational& q, long digits10) {
    PrecisionGuard guard(digits10);
    return BigReal(q);
}

Rational rational_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("rational_from_string: empty input");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
        return Rational(num) / Rational(den);
    }

    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = (s[pos] == '-');
        ++pos;
    }

    std::string digits;
    long frac_len = 0;
    long exponent = 0;
    bool seen_dot = false, seen_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (seen_dot) throw std::invalid_argument("rational_from_string: bad number: " + text);
            seen_dot = true;
        } else if (c == 'e' || c == 'E') {
            exponent = std::stol(s.substr(pos + 1));
            if (exponent > 1000000 || exponent < -1000000)
                throw std::invalid_argument("rational_from_string: exponent out of range");
            pos = s.size() - 1;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seen_dot) ++frac_len;
            seen_digit = true;
        } else {
            throw std::invalid_argument("rational_from_string: bad character in: " + text);
        }
    }
    if (!seen_digit) throw std::invalid_argument("rational_from_string: no digits in: " + text);

    // strip leading zeros so the integer parse can't misread an octal prefix
    std::size_t nz = digits.find_first_not_of('0');
    digits = (nz == std::string::npos) ? "0" : digits.substr(nz);

    Rational value{BigInt(digits)};
    long net = exponent - frac_len;
    if (net > 0) {
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(net));
        value *= Rational(scale);
    } else if (net < 0) {
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-net));
        value /= Rational(scale);
    }
    return negative ? Rational(-value) : value;
}

BigReal pi_value(long digits10) {
    PrecisionGuard guard(digits10);
    BigReal p;
    mpfr_const_pi(p.backend().data(), MPFR_RNDN);
    return p;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && numerator(q) <= 0; }

Rational rational_pow(const Rational& q, unsigned long n) {
    BigInt num = boost::multiprecision::pow(numerator(q), static_cast<unsigned>(n));
    BigInt den = boost::multiprecision::pow(denominator(q), static_cast<unsigned>(n));
    return Rational(num) / Rational(den);
}

namespace {

// Reduce q mod 2 into (-1, 1].
Rational reduce_mod_2(const Rational& q) {
    BigInt num = numerator(q), den = denominator(q);
    BigInt twice_den = 2 * den;
    BigInt rem = num % twice_den;  // sign of num
    if (rem < 0) rem += twice_den;
    Rational r = Rational(rem) / Rational(den);  // in [0, 2)
    if (r > 1) r -= 2;
    return r;  // (-1, 1]
}

}  // namespace

BigReal sinpi(const Rational& q, long digits10) {
    PrecisionGuard guard(digits10);
    Rational r = reduce_mod_2(q);  // sin(pi q) == sin(pi r)
    if (r > Rational(1) / 2) {
        r = 1 - r;  // sin(pi r) == sin(pi (1-r))
    } else if (r < Rational(-1) / 2) {
        r = -1 - r;  // reflection about -1/2
    }
    if (r == 0) return BigReal(0);
    if (r == Rational(1) / 2) return BigReal(1);
    if (r == Rational(-1) / 2) return BigReal(-1);
    BigReal x = BigReal(r) * pi_value(digits10);
    BigReal s;
    s = sin(x);
    return s;
}

BigReal cospi(const Rational& q, long digits10) {
    return sinpi(q + Rational(1) / 2, digits10);
}

BigReal sinpi_real(const BigReal& y) {
    long prec = static_cast<long>(y.precision());
    PrecisionGuard guard(prec + 10);
    BigReal k;
    mpfr_rint(k.backend().data(), y.backend().data(), MPFR_RNDN);
    if (!mpfr_fits_slong_p(k.backend().data(), MPFR_RNDN))
        throw std::domain_error("sinpi_real: argument too large for exact reduction");
    BigReal f = at_precision(y, prec + 20) - k;  // exact: |f| <= 1/2
    bool odd = !mpfr_zero_p(k.backend().data()) &&
               (mpfr_get_si(k.backend().data(), MPFR_RNDN) % 2 != 0);
    BigReal s = sin(f * pi_value(prec + 10));
    return odd ? BigReal(-s) : s;
}

long round_half_even(const BigReal& x) {
    BigReal k;
    mpfr_rint(k.backend().data(), x.backend().data(), MPFR_RNDN);
    return mpfr_get_si(k.backend().data(), MPFR_RNDN);
}

long floor_long(const BigReal& x) {
    BigReal k;
    mpfr_floor(k.backend().data(), x.backend().data());
    return mpfr_get_si(k.backend().data(), MPFR_RNDN);
}

std::string format_scientific(const BigReal& v, int significant) {
    if (significant < 1) significant = 1;
    std::string s = v.str(significant - 1, std::ios_base::scientific);
    // Normalize: guarantee an explicit exponent (str() omits it for 0 with
    // some libs) and at least two exponent digits.
    if (s.find('e') == std::string::npos) s += "e+00";
    return s;
}

std::string format_scientific(const BigComplex& v, int significant) {
    std::string im = format_scientific(v.im, significant);
    std::string joined = format_scientific(v.re, significant);
    if (!im.empty() && im[0] == '-') {
        joined += " - " + im.substr(1) + "i";
    } else {
        joined += " + " + im + "i";
    }
    return joined;
}

// ---------------------------------------------------------------------------
// BigComplex
// ---------------------------------------------------------------------------

bool is_finite(const BigReal& x) { return mpfr_number_p(x.backend().data()) != 0; }
bool is_finite(const BigComplex& z) { return is_finite(z.re) && is_finite(z.im); }

void ensure_finite(const BigReal& x, const char* where) {
    if (!is_finite(x)) throw NonFiniteResult(std::string(where) + ": non-finite result");
}
void ensure_finite(const BigComplex& z, const char* where) {
    if (!is_finite(z)) throw NonFiniteResult(std::string(where) + ": non-finite result");
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = norm2(b);
    if (d.is_zero()) throw NonFiniteResult("BigComplex division by zero");
    BigComplex r;
    r.re = (a.re * b.re + a.im * b.im) / d;
    r.im = (a.im * b.re - a.re * b.im) / d;
    ensure_finite(r, "BigComplex operator/");
    return r;
}

BigComplex operator/(const BigComplex& a, const BigReal& s) {
    if (s.is_zero()) throw NonFiniteResult("BigComplex division by zero scalar");
    BigComplex r;
    r.re = a.re / s;
    r.im = a.im / s;
    return r;
}

BigReal norm2(const BigComplex& z) {
    BigReal r;
    r = z.re * z.re + z.im * z.im;
    return r;
}

BigReal abs(const BigComplex& z) {
    BigReal r;
    mpfr_hypot(r.backend().data(), z.re.backend().data(), z.im.backend().data(), MPFR_RNDN);
    return r;
}

BigReal arg(const BigComplex& z) {
    BigReal r;
    r = atan2(z.im, z.re);
    return r;
}

BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.re);
    BigComplex r;
    r.re = m * cos(z.im);
    r.im = m * sin(z.im);
    ensure_finite(r, "BigComplex exp");
    return r;
}

BigComplex log(const BigComplex& z) {
    if (z.is_zero()) throw NonFiniteResult("BigComplex log of zero");
    BigComplex r;
    r.re = log(abs(z));
    r.im = arg(z);
    return r;
}

BigComplex sqrt(const BigComplex& z) {
    if (z.is_zero()) return BigComplex();
    BigReal r = abs(z);
    BigComplex out;
    if (z.re.sign() >= 0) {
        BigReal t = sqrt((r + z.re) / 2);
        out.re = t;
        out.im = z.im / (2 * t);
    } else {
        BigReal t = sqrt((r - z.re) / 2);
        // principal branch: Im(sqrt) carries the sign of Im(z); +i side on the cut
        if (z.im.sign() < 0) t = -t;
        out.re = z.im.is_zero() ? BigReal(0) : BigReal(z.im / (2 * t));
        out.im = t;
        if (z.im.is_zero()) out.im = abs(out.im);
    }
    ensure_finite(out, "BigComplex sqrt");
    return out;
}

BigComplex pow(const BigComplex& z, const BigReal& p) {
    if (z.is_zero()) {
        if (p.sign() > 0) return BigComplex();
        throw NonFiniteResult("BigComplex pow: zero base with nonpositive exponent");
    }
    return exp(BigComplex(p) * log(z));
}

BigComplex inverse(const BigComplex& z) {
    BigReal d = norm2(z);
    if (d.is_zero()) throw NonFiniteResult("BigComplex inverse of zero");
    BigComplex r;
    r.re = z.re / d;
    r.im = -z.im / d;
    return r;
}

BigComplex unit_phase(const Rational& q, long digits10) {
    BigComplex r;
    r.re = cospi(q, digits10);
    r.im = sinpi(q, digits10);
    return r;
}

}  // namespace mlasym
