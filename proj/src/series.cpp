#include "catalan/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace catalan {

TruncatedSeries::TruncatedSeries(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("a truncated series needs at least the constant term");
    }
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<BigRat>(order + 1, BigRat(0)));
}

TruncatedSeries TruncatedSeries::constant(const BigRat& value, std::size_t order) {
    std::vector<BigRat> c(order + 1, BigRat(0));
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    if (order < 1) throw std::invalid_argument("the monomial x needs order >= 1");
    std::vector<BigRat> c(order + 1, BigRat(0));
    c[1] = 1;
    return TruncatedSeries(std::move(c));
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const BigRat& q) { return sgn(q) == 0; });
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<BigRat> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) c[j] = a[j] + b[j];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<BigRat> c(n + 1);
    for (std::size_t j = 0; j <= n; ++j) c[j] = a[j] - b[j];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    std::vector<BigRat> c(a.order() + 1);
    for (std::size_t j = 0; j <= a.order(); ++j) c[j] = -a[j];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.order(), b.order());
    std::vector<BigRat> c(n + 1, BigRat(0));
    BigRat t;
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (sgn(b[j]) == 0) continue;
            t = a[i] * b[j];
            c[i + j] += t;
        }
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const BigRat& r, const TruncatedSeries& a) {
    std::vector<BigRat> c(a.order() + 1);
    for (std::size_t j = 0; j <= a.order(); ++j) c[j] = r * a[j];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries add_constant(const TruncatedSeries& a, const BigRat& c0) {
    std::vector<BigRat> c = a.coeffs();
    c[0] += c0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries truncate_to(const TruncatedSeries& a, std::size_t order) {
    if (order > a.order()) {
        throw std::invalid_argument("truncate_to cannot raise the order");
    }
    std::vector<BigRat> c(a.coeffs().begin(), a.coeffs().begin() + order + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries extended(const TruncatedSeries& a, std::size_t order) {
    if (order < a.order()) {
        throw std::invalid_argument("extended cannot lower the order");
    }
    std::vector<BigRat> c = a.coeffs();
    c.resize(order + 1, BigRat(0));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries shift_up(const TruncatedSeries& a, std::size_t new_order) {
    std::vector<BigRat> c(new_order + 1, BigRat(0));
    for (std::size_t j = 0; j + 1 <= new_order && j <= a.order(); ++j) {
        c[j + 1] = a[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries shift_down(const TruncatedSeries& a) {
    if (a.order() < 1) throw std::invalid_argument("shift_down needs order >= 1");
    if (sgn(a[0]) != 0) {
        throw std::invalid_argument("shift_down requires a zero constant term");
    }
    std::vector<BigRat> c(a.coeffs().begin() + 1, a.coeffs().end());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries inverse(const TruncatedSeries& a) {
    if (sgn(a[0]) == 0) {
        throw std::domain_error("series inverse requires a nonzero constant term");
    }
    std::size_t n = a.order();
    std::vector<BigRat> b(n + 1);
    b[0] = BigRat(1) / a[0];
    BigRat s, t;
    for (std::size_t m = 1; m <= n; ++m) {
        s = 0;
        for (std::size_t k = 1; k <= m; ++k) {
            if (sgn(a[k]) == 0) continue;
            t = a[k] * b[m - k];
            s += t;
        }
        b[m] = -s / a[0];
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries sqrt(const TruncatedSeries& a) {
    if (a[0] != 1) {
        throw std::domain_error("series sqrt requires constant term exactly 1");
    }
    const std::size_t target_mod = a.order() + 1;
    // y agrees with sqrt(a) modulo x^(order+1); each Newton step doubles that.
    TruncatedSeries y = TruncatedSeries::constant(BigRat(1), 0);
    while (y.order() + 1 < target_mod) {
        std::size_t next_mod = std::min(2 * (y.order() + 1), target_mod);
        TruncatedSeries ye = extended(y, next_mod - 1);
        TruncatedSeries quotient = truncate_to(a, next_mod - 1) * inverse(ye);
        y = make_rational(1, 2) * (ye + quotient);
    }
    return y;
}

TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (sgn(g[0]) != 0) {
        throw std::domain_error("series composition requires g(0) == 0");
    }
    std::size_t n = std::min(f.order(), g.order());
    TruncatedSeries gt = truncate_to(g, n);
    TruncatedSeries acc = TruncatedSeries::constant(f[n], n);
    for (std::size_t j = n; j-- > 0;) {
        acc = add_constant(acc * gt, f[j]);
    }
    return acc;
}

TruncatedSeries fixed_point_series(std::size_t order) {
    TruncatedSeries w = TruncatedSeries::constant(BigRat(1), 0);
    for (std::size_t t = 1; t <= order; ++t) {
        // w_t = 1 + x * w_{t-1}^2, carried at order t: coefficients up to
        // x^t only depend on already-correct coefficients of w_{t-1}.
        w = add_constant(shift_up(w * w, t), BigRat(1));
    }
    return w;
}

TruncatedSeries sqrt_formula_series(std::size_t order) {
    // 1 - sqrt(1 - 4x) at order+1, then one power of x down and a halving.
    std::vector<BigRat> base(order + 2, BigRat(0));
    base[0] = 1;
    base[1] = -4;
    TruncatedSeries numerator =
        add_constant(-sqrt(TruncatedSeries(std::move(base))), BigRat(1));
    if (sgn(numerator[0]) != 0) {
        throw std::logic_error("1 - sqrt(1 - 4x) acquired a nonzero constant term");
    }
    return make_rational(1, 2) * shift_down(numerator);
}

TruncatedSeries series_from_table(const CatalanTable& table, std::size_t order) {
    if (order > table.max_index()) {
        throw std::invalid_argument("table too short for the requested series order");
    }
    std::vector<BigRat> c(order + 1);
    for (std::size_t j = 0; j <= order; ++j) c[j] = BigRat(table.values[j]);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries negative_binomial_series(std::size_t k, std::size_t order) {
    std::vector<BigRat> c(order + 1);
    BigInt b(1);  // binom(m + 2k, 2k)
    BigInt p(1);  // 2^m
    for (std::size_t m = 0; m <= order; ++m) {
        c[m] = BigRat(b * p);
        b *= static_cast<unsigned long>(m + 1 + 2 * k);
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(m) + 1);
        p <<= 1;
    }
    return TruncatedSeries(std::move(c));
}

SeriesResidual residual_of(const TruncatedSeries& r) {
    SeriesResidual out;
    out.max_abs_coeff = 0;
    for (std::size_t j = 0; j <= r.order(); ++j) {
        if (sgn(r[j]) == 0) continue;
        if (!out.first_failing_index) out.first_failing_index = j;
        BigRat a = abs(r[j]);
        if (a > out.max_abs_coeff) out.max_abs_coeff = a;
    }
    return out;
}

SeriesResidual functional_equation_residual(const TruncatedSeries& w) {
    TruncatedSeries xw2 = shift_up(w * w, w.order());
    return residual_of(w - add_constant(xw2, BigRat(1)));
}

SeriesResidual verify_touchard_derivation(std::size_t order, std::size_t term_cutoff) {
    std::size_t needed = (order + 1) / 2;
    if (term_cutoff < needed) {
        throw std::invalid_argument(
            "term cutoff " + std::to_string(term_cutoff) + " is below ceil(order/2) = " +
            std::to_string(needed) + "; coefficients up to x^order would miss terms");
    }
    CatalanTable table = product_recurrence_table(order);

    TruncatedSeries lhs = TruncatedSeries::zero(order);
    for (std::size_t k = 0; k <= term_cutoff && 2 * k <= order; ++k) {
        TruncatedSeries e = negative_binomial_series(k, order - 2 * k);
        BigRat ck(table.values[k]);
        for (std::size_t m = 0; m + 2 * k <= order; ++m) {
            lhs.at(m + 2 * k) += ck * e[m];
        }
    }

    TruncatedSeries cx = series_from_table(table, order);
    return residual_of(lhs - cx * cx);
}

}  // namespace catalan
