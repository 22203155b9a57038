#pragma once

#include "mlasym/precision.hpp"

namespace mlasym {

// Optimal truncation data: aM = X + nu with X = x^(1/a), M the nearest
// integer to X/a (ties to even), nu the bounded offset.
struct TruncationData {
    long M = 0;
    BigReal nu;
    BigReal X;
};

struct TruncationBudget {
    static long max_index;  // default 10^6
};

// 0 < a <= 1 (a = 1 is the degenerate boundary where every algebraic term
// vanishes), x > 0.
TruncationData optimal_truncation(const Rational& a, const Rational& x,
                                  const PrecisionContext& ctx);

// k-th term of the truncated algebraic expansion: -(-x)^(-k)/Gamma(1-ak),
// i.e. (-1)^(k+1) Gamma(ak) sin(pi a k) / (pi x^k). Exactly zero when ak is
// a positive integer.
BigReal algebraic_term(const Rational& a, const Rational& x, long k,
                       const PrecisionContext& ctx);

// Sum of algebraic_term for k = 1..M.
BigReal algebraic_partial_sum(const Rational& a, const Rational& x, long M,
                              const PrecisionContext& ctx);

// script-E(a;x) = E_a(-x) + sum_{k=1}^{M} (-x)^(-k)/Gamma(1-ak) with M from
// optimal_truncation; precision is auto-raised so the exponentially small
// result still carries at least max(15, ctx.digits) significant digits.
BigReal script_E(const Rational& a, const Rational& x, const PrecisionContext& ctx);

// Same with an explicit truncation index (used to probe inconsistent table
// captions); M need not be optimal.
BigReal script_E_at(const Rational& a, const Rational& x, long M,
                    const PrecisionContext& ctx);

}  // namespace mlasym
