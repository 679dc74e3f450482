#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "catalan/numbers.hpp"

namespace catalan {

// Univariate polynomial over the rationals, coefficient of z^i at index i.
// Trailing zeros are trimmed; the zero polynomial has degree -1.
class PolynomialZ {
public:
    PolynomialZ() = default;
    explicit PolynomialZ(std::vector<BigRat> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of z^i, zero beyond the degree.
    BigRat coeff(std::size_t i) const;
    const std::vector<BigRat>& coeffs() const { return coeffs_; }

    BigRat evaluate(const BigRat& z) const;

    friend bool operator==(const PolynomialZ&, const PolynomialZ&) = default;

private:
    std::vector<BigRat> coeffs_;
};

PolynomialZ operator+(const PolynomialZ& a, const PolynomialZ& b);
PolynomialZ operator-(const PolynomialZ& a, const PolynomialZ& b);
PolynomialZ operator*(const PolynomialZ& a, const PolynomialZ& b);
PolynomialZ operator*(const BigRat& r, const PolynomialZ& a);

// F(z, w) = a(z) w^2 + b(z) w + c(z), genuinely quadratic in w.
struct ImplicitQuadratic {
    PolynomialZ a, b, c;

    ImplicitQuadratic(PolynomialZ a_, PolynomialZ b_, PolynomialZ c_);
};

BigRat evaluate(const ImplicitQuadratic& curve, const BigRat& z, const BigRat& w);

// True iff dF/dw = 2 a(z0) w0 + b(z0) is nonzero. The point must lie on
// the curve; anything else is a precondition violation.
bool regular_point_check(const ImplicitQuadratic& curve, const BigRat& z0,
                         const BigRat& w0);

// b(z)^2 - 4 a(z) c(z); its zeros are the candidate singular points.
PolynomialZ discriminant(const ImplicitQuadratic& curve);

// Every rational root, each verified by exact evaluation, sorted by
// modulus ascending; a tie between r and -r lists the positive root first.
std::vector<BigRat> rational_roots(const PolynomialZ& p);

struct SingularPoint {
    BigRat z_star;
    BigRat w_star;
};

// Sign-change bracket around a real root that is provably not rational.
struct IsolatingInterval {
    BigRat lo;
    BigRat hi;
};

struct SingularityResult {
    std::optional<SingularPoint> point;         // the rational singularity, if any
    std::optional<IsolatingInterval> non_rational;  // evidence when there is none

    bool found_rational() const { return point.has_value(); }
};

// Smallest-modulus rational root z* of the discriminant together with
// w* = -b(z*) / (2 a(z*)); both defining equations are asserted exactly.
// With no rational root the result reports that, isolating a real root by
// sign changes when one is visible, rather than failing.
SingularityResult locate_singularity(const ImplicitQuadratic& curve);

}  // namespace catalan
