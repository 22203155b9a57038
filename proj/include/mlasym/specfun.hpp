#pragma once

#include "mlasym/precision.hpp"

namespace mlasym {

// Gamma of a real argument (any sign except nonpositive integers), good to
// relative 10^(-digits). Stirling series after upward argument promotion;
// reflection formula below 1/2.
BigReal gamma_hp(const BigReal& y, const PrecisionContext& ctx);

// 1/Gamma(q) for an exact rational argument; exactly zero at nonpositive
// integers. Uses the sine reflection form below 1/2, so no pole is ever hit.
BigReal recip_gamma(const Rational& q, const PrecisionContext& ctx);

// Complementary error function of a complex argument. Accuracy: relative
// 10^(-digits) on the scale max(|erfc(w)|, |exp(-w^2)|). Maclaurin series
// below the switch radius max(4, digits/4), Laplace continued fraction for
// large |w| in the right half-plane, reflection erfc(-w) = 2 - erfc(w)
// otherwise.
BigComplex erfc_complex(const BigComplex& w, const PrecisionContext& ctx);

// Exact Bernoulli number B_{2k} (B_2 = 1/6, B_4 = -1/30, ...), cached.
Rational bernoulli_2k(unsigned k);

// Rising factorial (1/2)_k, exact.
Rational pochhammer_half(unsigned k);

namespace detail {
// The two erfc branches, exposed for the switchover-continuity tests.
BigComplex erfc_series_branch(const BigComplex& w, long want_digits);
bool erfc_cf_branch(const BigComplex& w, long want_digits, BigComplex& out);
}  // namespace detail

}  // namespace mlasym
