#include "catalan/singularity.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace catalan {

namespace {

void trim(std::vector<BigRat>& coeffs) {
    while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
}

// Positive divisors of |m|, by trial division. The polynomials this module
// sees have small integerized coefficients, so no factoring machinery.
std::vector<BigInt> positive_divisors(BigInt m) {
    m = abs(m);
    std::vector<BigInt> small, large;
    for (BigInt d(1); d * d <= m; ++d) {
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            small.push_back(d);
            BigInt q = m / d;
            if (q != d) large.push_back(q);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// |a| < |b|, with a modulus tie ranking the positive value first.
bool modulus_less(const BigRat& a, const BigRat& b) {
    int c = cmp(BigRat(abs(a)), BigRat(abs(b)));
    if (c != 0) return c < 0;
    return sgn(a) > sgn(b);
}

// Content-free integer coefficients of p (lcm of denominators, gcd out).
std::vector<BigInt> integerize(const PolynomialZ& p) {
    BigInt lcm(1);
    for (const BigRat& q : p.coeffs()) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    BigInt content(0);
    for (const BigRat& q : p.coeffs()) {
        BigInt v = BigInt(q.get_num()) * (lcm / BigInt(q.get_den()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        out.push_back(std::move(v));
    }
    if (content > 1) {
        for (BigInt& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    }
    return out;
}

}  // namespace

PolynomialZ::PolynomialZ(std::vector<BigRat> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

BigRat PolynomialZ::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : BigRat(0);
}

BigRat PolynomialZ::evaluate(const BigRat& z) const {
    BigRat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * z + coeffs_[i];
    }
    return acc;
}

PolynomialZ operator+(const PolynomialZ& a, const PolynomialZ& b) {
    std::vector<BigRat> c(std::max(a.coeffs().size(), b.coeffs().size()), BigRat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return PolynomialZ(std::move(c));
}

PolynomialZ operator-(const PolynomialZ& a, const PolynomialZ& b) {
    std::vector<BigRat> c(std::max(a.coeffs().size(), b.coeffs().size()), BigRat(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return PolynomialZ(std::move(c));
}

PolynomialZ operator*(const PolynomialZ& a, const PolynomialZ& b) {
    if (a.is_zero() || b.is_zero()) return PolynomialZ();
    std::vector<BigRat> c(a.coeffs().size() + b.coeffs().size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (sgn(a.coeffs()[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            c[i + j] += a.coeffs()[i] * b.coeffs()[j];
        }
    }
    return PolynomialZ(std::move(c));
}

PolynomialZ operator*(const BigRat& r, const PolynomialZ& a) {
    std::vector<BigRat> c(a.coeffs());
    for (BigRat& q : c) q *= r;
    return PolynomialZ(std::move(c));
}

ImplicitQuadratic::ImplicitQuadratic(PolynomialZ a_, PolynomialZ b_, PolynomialZ c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (a.is_zero()) {
        throw std::invalid_argument(
            "the w^2 coefficient polynomial is identically zero; the curve is not "
            "quadratic in w");
    }
}

BigRat evaluate(const ImplicitQuadratic& curve, const BigRat& z, const BigRat& w) {
    return curve.a.evaluate(z) * w * w + curve.b.evaluate(z) * w + curve.c.evaluate(z);
}

bool regular_point_check(const ImplicitQuadratic& curve, const BigRat& z0,
                         const BigRat& w0) {
    if (sgn(evaluate(curve, z0, w0)) != 0) {
        throw std::invalid_argument("regular_point_check needs a point on the curve");
    }
    BigRat partial = 2 * curve.a.evaluate(z0) * w0 + curve.b.evaluate(z0);
    return sgn(partial) != 0;
}

PolynomialZ discriminant(const ImplicitQuadratic& curve) {
    return curve.b * curve.b - BigRat(4) * (curve.a * curve.c);
}

std::vector<BigRat> rational_roots(const PolynomialZ& p) {
    if (p.is_zero()) {
        throw std::domain_error("the zero polynomial vanishes everywhere");
    }
    std::vector<BigRat> roots;
    if (p.degree() == 0) return roots;

    std::vector<BigInt> c = integerize(p);

    // Factor out z^v: zero is a root when the constant term vanishes.
    std::size_t v = 0;
    while (v < c.size() && c[v] == 0) ++v;
    if (v > 0) {
        roots.emplace_back(0);
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(v));
    }

    if (c.size() >= 2) {
        if (c.size() == 2) {
            BigRat r(-c[0], c[1]);
            r.canonicalize();
            roots.push_back(std::move(r));
        } else {
            // Rational root theorem: candidates num/den with num | c_0
            // and den | c_lead, both signs, tested by exact evaluation.
            PolynomialZ q = [&] {
                std::vector<BigRat> qc;
                qc.reserve(c.size());
                for (const BigInt& x : c) qc.emplace_back(x);
                return PolynomialZ(std::move(qc));
            }();
            for (const BigInt& num : positive_divisors(c.front())) {
                for (const BigInt& den : positive_divisors(c.back())) {
                    if (gcd(num, den) != 1) continue;
                    BigRat candidate(num, den);
                    candidate.canonicalize();
                    for (int s : {+1, -1}) {
                        BigRat r = s > 0 ? candidate : BigRat(-candidate);
                        if (sgn(q.evaluate(r)) == 0) roots.push_back(r);
                    }
                }
            }
        }
    }

    std::sort(roots.begin(), roots.end(), modulus_less);
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

// Sign-change bracket for a real root when no rational one exists: scan a
// Cauchy-bounded grid, then bisect the first bracket down to width 2^-40.
std::optional<IsolatingInterval> isolate_real_root(const PolynomialZ& p) {
    BigRat bound(1);
    const BigRat& lead = p.coeffs().back();
    for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
        BigRat ratio = abs(p.coeffs()[i] / lead);
        if (ratio + 1 > bound) bound = ratio + 1;
    }

    constexpr int kGrid = 512;
    BigRat step = 2 * bound / kGrid;
    BigRat lo, hi;
    bool found = false;
    BigRat x = -bound;
    BigRat fx = p.evaluate(x);
    for (int j = 1; j <= kGrid && !found; ++j) {
        BigRat y = -bound + j * step;
        BigRat fy = p.evaluate(y);
        if (sgn(fx) != 0 && sgn(fy) != 0 && sgn(fx) != sgn(fy)) {
            lo = x;
            hi = y;
            found = true;
        }
        x = y;
        fx = fy;
    }
    if (!found) return std::nullopt;

    BigRat width_target = make_rational(1, 1) / BigRat(pow2(40));
    while (hi - lo > width_target) {
        BigRat mid = (lo + hi) / 2;
        BigRat fmid = p.evaluate(mid);
        if (sgn(fmid) == 0) {
            // A rational root here would contradict the caller's search.
            throw std::logic_error("bisection landed on a rational root");
        }
        if (sgn(fmid) == sgn(p.evaluate(lo))) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return IsolatingInterval{lo, hi};
}

}  // namespace

SingularityResult locate_singularity(const ImplicitQuadratic& curve) {
    PolynomialZ disc = discriminant(curve);
    if (disc.is_zero()) {
        throw std::domain_error(
            "the discriminant vanishes identically: every point is a double root");
    }

    std::vector<BigRat> roots = rational_roots(disc);
    SingularityResult result;
    if (roots.empty()) {
        if (disc.degree() >= 1) result.non_rational = isolate_real_root(disc);
        return result;
    }

    const BigRat& z_star = roots.front();
    BigRat a_at = curve.a.evaluate(z_star);
    if (sgn(a_at) == 0) {
        throw std::domain_error(
            "leading coefficient a(z) vanishes at the candidate singularity z* = " +
            fraction(z_star));
    }
    BigRat w_star = -curve.b.evaluate(z_star) / (2 * a_at);

    if (sgn(evaluate(curve, z_star, w_star)) != 0 ||
        sgn(2 * a_at * w_star + curve.b.evaluate(z_star)) != 0) {
        throw std::logic_error("located point fails its defining equations");
    }
    result.point = SingularPoint{z_star, w_star};
    return result;
}

}  // namespace catalan
