#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "catalan/numbers.hpp"
#include "catalan/sequence.hpp"

namespace catalan {

// A formal power series known modulo x^(order+1), with exact rational
// coefficients. Binary operations truncate to the minimum operand order;
// there is no implicit zero-extension, so arithmetic never claims
// coefficients beyond what both operands actually carry.
class TruncatedSeries {
public:
    // coeffs[j] is the coefficient of x^j; must be nonempty.
    explicit TruncatedSeries(std::vector<BigRat> coeffs);

    static TruncatedSeries zero(std::size_t order);
    static TruncatedSeries constant(const BigRat& value, std::size_t order);
    // The monomial x, zero-padded to the requested order (order >= 1).
    static TruncatedSeries identity(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const BigRat& operator[](std::size_t j) const { return coeffs_[j]; }
    const std::vector<BigRat>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    BigRat& at(std::size_t j) { return coeffs_[j]; }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<BigRat> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
// Cauchy product, truncated to the minimum operand order.
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const BigRat& r, const TruncatedSeries& a);

TruncatedSeries add_constant(const TruncatedSeries& a, const BigRat& c);

// Order-changing helpers. truncate keeps a prefix; extended treats the
// series as a polynomial and zero-extends it explicitly.
TruncatedSeries truncate_to(const TruncatedSeries& a, std::size_t order);
TruncatedSeries extended(const TruncatedSeries& a, std::size_t order);

// Multiply by x, producing a series of exactly new_order (the top input
// coefficient is dropped when new_order == a.order()).
TruncatedSeries shift_up(const TruncatedSeries& a, std::size_t new_order);
// Divide by x; requires a[0] == 0 and a.order() >= 1.
TruncatedSeries shift_down(const TruncatedSeries& a);

// Multiplicative inverse modulo x^(order+1); requires a[0] != 0.
TruncatedSeries inverse(const TruncatedSeries& a);

// Square root with constant term 1, computed by Newton iteration
// y <- (y + a/y) / 2 with order doubling; requires a[0] == 1.
TruncatedSeries sqrt(const TruncatedSeries& a);

// f(g(x)) by Horner evaluation; requires g[0] == 0.
TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g);

// ---- Catalan series constructions -----------------------------------------

// The unique series with w = 1 + x*w^2, by plain fixed-point iteration:
// each pass secures at least one further coefficient.
TruncatedSeries fixed_point_series(std::size_t order);

// (1 - sqrt(1 - 4x)) / (2x), assembled exactly at the requested order.
TruncatedSeries sqrt_formula_series(std::size_t order);

// Lift of a generated table into a series of the given order.
TruncatedSeries series_from_table(const CatalanTable& table, std::size_t order);

// 1 / (1 - 2x)^(2k+1): coefficient of x^m is binom(m + 2k, 2k) * 2^m.
TruncatedSeries negative_binomial_series(std::size_t k, std::size_t order);

// ---- Identity checks -------------------------------------------------------

struct SeriesResidual {
    BigRat max_abs_coeff;  // 0 exactly when the identity holds
    std::optional<std::size_t> first_failing_index;

    bool is_zero() const { return !first_failing_index.has_value(); }
};

SeriesResidual residual_of(const TruncatedSeries& r);

// Residual of w - 1 - x*w^2 at w's own order.
SeriesResidual functional_equation_residual(const TruncatedSeries& w);

// Replays the coefficient-level derivation behind the Touchard recurrence:
// compares sum_{k=0}^{K} C_k x^(2k) / (1-2x)^(2k+1) against C(x)^2, both
// truncated at the given order. Requires K >= ceil(order/2) so that every
// coefficient receives all of its contributing terms.
SeriesResidual verify_touchard_derivation(std::size_t order, std::size_t term_cutoff);

}  // namespace catalan
