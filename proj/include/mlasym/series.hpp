#pragma once

#include <vector>

#include "mlasym/precision.hpp"

namespace mlasym {

// Finite list of complex coefficients; index r holds the coefficient of u^r.
// All arithmetic truncates at the common order (number of retained
// coefficients); discarded tails are dropped silently.
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::size_t order) : coeffs_(order) {}
    explicit TruncatedSeries(std::vector<BigComplex> coeffs) : coeffs_(std::move(coeffs)) {}

    std::size_t order() const { return coeffs_.size(); }
    const BigComplex& operator[](std::size_t r) const { return coeffs_[r]; }
    BigComplex& operator[](std::size_t r) { return coeffs_[r]; }
    const std::vector<BigComplex>& coeffs() const { return coeffs_; }

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }
    static TruncatedSeries constant(const BigComplex& c, std::size_t order);
    // The series u itself.
    static TruncatedSeries identity(std::size_t order);
    // exp(v) = sum v^r / r!
    static TruncatedSeries exp_series(std::size_t order, const PrecisionContext& ctx);
    // log(1+v) = sum (-1)^(r+1) v^r / r
    static TruncatedSeries log1p_series(std::size_t order, const PrecisionContext& ctx);

    TruncatedSeries scaled(const BigComplex& s) const;
    // Multiply by u^k (shift up, truncate).
    TruncatedSeries mul_power(std::size_t k) const;
    // Divide by u^k; the k lowest coefficients must vanish structurally
    // (they are dropped); order shrinks by zero-padding at the top.
    TruncatedSeries div_power(std::size_t k) const;

private:
    std::vector<BigComplex> coeffs_;
};

enum class SeriesOp { add, sub, mul, div };

// Formal +,-,*,/ truncated at the common order. Division requires a
// nonzero constant term in rhs.
TruncatedSeries series_arith(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                             SeriesOp op, const PrecisionContext& ctx);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b,
                           const PrecisionContext& ctx);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b,
                           const PrecisionContext& ctx);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b,
                           const PrecisionContext& ctx);
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b,
                           const PrecisionContext& ctx);

// outer(inner(u)); inner must have zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& outer, const TruncatedSeries& inner,
                               const PrecisionContext& ctx);

// Functional inverse: returns r with compose(s, r) == u. Requires
// s[0] == 0, s[1] != 0. Newton iteration on series.
TruncatedSeries series_revert(const TruncatedSeries& s, const PrecisionContext& ctx);

// sqrt with the principal branch of the constant term (which must be nonzero).
TruncatedSeries series_sqrt(const TruncatedSeries& s, const PrecisionContext& ctx);

// max_r |a[r] - b[r]|
BigReal series_max_deviation(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace mlasym
