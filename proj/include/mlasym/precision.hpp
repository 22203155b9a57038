#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <utility>

#include "mlasym/errors.hpp"

namespace mlasym {

// Arbitrary-precision carriers. BigReal precision is per-value and set at
// runtime; new values pick up the thread's current default precision
// (decimal digits), which PrecisionGuard scopes.
using BigReal  = boost::multiprecision::mpfr_float;
using Rational = boost::multiprecision::mpq_rational;
using BigInt   = boost::multiprecision::mpz_int;

// Working-precision contract threaded through every numeric operation:
// results are good to relative 10^(-digits); guard digits are carried
// internally on top of that.
struct PrecisionContext {
    long digits;
    long guard;

    explicit PrecisionContext(long digits_ = 60, long guard_ = 10)
        : digits(digits_), guard(guard_) {
        if (digits < 16) throw std::invalid_argument("PrecisionContext: digits must be >= 16");
        if (guard < 5) throw std::invalid_argument("PrecisionContext: guard must be >= 5");
    }

    long working() const { return digits + guard; }

    PrecisionContext with_digits(long d) const { return PrecisionContext(d, guard); }
    PrecisionContext escalated(long extra) const {
        return PrecisionContext(digits + (extra > 0 ? extra : 0), guard);
    }
};

// RAII scope for the thread default precision used by temporaries.
class PrecisionGuard {
public:
    explicit PrecisionGuard(long digits10)
        : saved_(BigReal::default_precision()) {
        BigReal::default_precision(static_cast<unsigned>(digits10));
    }
    ~PrecisionGuard() { BigReal::default_precision(saved_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Value re-expressed at exactly `digits10` decimal digits of precision.
BigReal at_precision(const BigReal& x, long digits10);

BigReal to_real(const Rational& q, long digits10);

// Accepts "0.99", "-3", "1/3", "1e-6", "2.5e3".
Rational rational_from_string(const std::string& text);

BigReal pi_value(long digits10);

// sin(pi*q), cos(pi*q) with the reduction mod 2 done exactly in rational
// arithmetic; exact zeros/ones at (half-)integers.
BigReal sinpi(const Rational& q, long digits10);
BigReal cospi(const Rational& q, long digits10);

// sin(pi*y) for a binary value y, reduced mod 1 exactly.
BigReal sinpi_real(const BigReal& y);

bool is_integer(const Rational& q);
bool is_nonpositive_integer(const Rational& q);

Rational rational_pow(const Rational& q, unsigned long n);

// Nearest integer, ties to even.
long round_half_even(const BigReal& x);

long floor_long(const BigReal& x);

// Scientific-notation string with `significant` digits, round-half-even,
// lowercase 'e', at least two exponent digits. Deterministic and
// locale-independent.
std::string format_scientific(const BigReal& v, int significant);

// ---------------------------------------------------------------------------
// Complex scalar
// ---------------------------------------------------------------------------

struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    explicit BigComplex(const BigReal& r) : re(r), im(0) {}
    explicit BigComplex(long v) : re(v), im(0) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    BigComplex& operator+=(const BigComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    BigComplex& operator-=(const BigComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
};

bool is_finite(const BigReal& x);
bool is_finite(const BigComplex& z);
void ensure_finite(const BigReal& x, const char* where);
void ensure_finite(const BigComplex& z, const char* where);

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    BigComplex r;
    r.re = a.re + b.re;
    r.im = a.im + b.im;
    return r;
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    BigComplex r;
    r.re = a.re - b.re;
    r.im = a.im - b.im;
    return r;
}
inline BigComplex operator-(const BigComplex& a) {
    BigComplex r;
    r.re = -a.re;
    r.im = -a.im;
    return r;
}
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    BigComplex r;
    r.re = a.re * b.re - a.im * b.im;
    r.im = a.re * b.im + a.im * b.re;
    return r;
}
inline BigComplex operator*(const BigReal& s, const BigComplex& a) {
    BigComplex r;
    r.re = s * a.re;
    r.im = s * a.im;
    return r;
}
inline BigComplex operator*(const BigComplex& a, const BigReal& s) { return s * a; }

BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigReal& s);

inline BigComplex conj(const BigComplex& z) {
    BigComplex r;
    r.re = z.re;
    r.im = -z.im;
    return r;
}
// i*z without a multiplication
inline BigComplex times_i(const BigComplex& z) {
    BigComplex r;
    r.re = -z.im;
    r.im = z.re;
    return r;
}

BigReal abs(const BigComplex& z);
BigReal norm2(const BigComplex& z);  // |z|^2
BigReal arg(const BigComplex& z);

BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);   // principal
BigComplex sqrt(const BigComplex& z);  // principal
BigComplex pow(const BigComplex& z, const BigReal& p);
BigComplex inverse(const BigComplex& z);

// exp(i*pi*q) with exact rational reduction of the angle.
BigComplex unit_phase(const Rational& q, long digits10);

std::string format_scientific(const BigComplex& v, int significant);

}  // namespace mlasym
