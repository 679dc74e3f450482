#include "catalan/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "catalan/sequence.hpp"

namespace catalan {

namespace {

// How far minimal_inductive_constant scans C_n / 4^n for the supremum.
constexpr std::size_t kInductionScanRange = 2000;

BigRat rational_power_of_4(std::size_t e) {
    return BigRat(pow4(static_cast<unsigned long>(e)));
}

}  // namespace

std::string_view bound_name_string(BoundName b) {
    switch (b) {
        case BoundName::UpperTouchard: return "upper_touchard";
        case BoundName::UpperSegner: return "upper_segner";
        case BoundName::LowerCentralBinomial: return "lower_central_binomial";
        case BoundName::LowerTouchard: return "lower_touchard";
    }
    return "unknown";
}

BigLog big_log(const BigInt& x) {
    if (sgn(x) <= 0) {
        throw std::domain_error("big_log is only defined for integers >= 1");
    }
    const std::size_t bits = bit_length(x);
    long double value;
    if (bits <= 64) {
        value = std::log(static_cast<long double>(mpz_get_ui(x.get_mpz_t())));
    } else {
        BigInt mantissa;
        mpz_tdiv_q_2exp(mantissa.get_mpz_t(), x.get_mpz_t(),
                        static_cast<mp_bitcnt_t>(bits - 64));
        value = static_cast<long double>(bits - 64) * std::numbers::ln2_v<long double> +
                std::log(static_cast<long double>(mpz_get_ui(mantissa.get_mpz_t())));
    }
    // Truncation of the low bits contributes at most 2^-63; the remaining
    // terms cover log/constant rounding and the final additions.
    long double err = std::ldexp(
        4.0L + 0.5L * static_cast<long double>(bits) + 2.0L * std::fabs(value), -63);
    return {value, err};
}

BoundReport verify_upper_bound_induction(const BigRat& A, std::size_t n_max) {
    if (sgn(A) <= 0) {
        throw std::domain_error("the induction constant A must be positive");
    }
    CatalanTable table = product_recurrence_table(n_max);

    BoundReport report;
    report.bound_name = BoundName::UpperTouchard;
    report.checked_up_to = n_max;
    report.constant_A = A;

    auto violate = [&report](std::size_t n) {
        if (!report.first_violation) report.first_violation = n;
    };

    // Base cases.
    if (BigRat(table.values[0]) > A) violate(0);
    if (n_max >= 1 && BigRat(table.values[1]) > 4 * A) violate(1);

    // Inductive steps: budget (A/2) 4^n <= A 4^(n+1), then the concrete bound.
    for (std::size_t n = 1; n < n_max; ++n) {
        BigRat budget_lhs = A * BigRat(pow2(static_cast<unsigned long>(n)) *
                                       pow2(static_cast<unsigned long>(n - 1)));
        BigRat budget_rhs = A * rational_power_of_4(n + 1);
        if (budget_lhs > budget_rhs) violate(n + 1);
        if (BigRat(table.values[n + 1]) > budget_rhs) violate(n + 1);
    }

    report.holds = !report.first_violation.has_value();
    return report;
}

BigRat minimal_inductive_constant() {
    CatalanTable table = product_recurrence_table(kInductionScanRange);
    BigRat best(0);
    BigInt pow(1);
    for (std::size_t n = 0; n <= kInductionScanRange; ++n) {
        BigRat candidate(table.values[n], pow);
        candidate.canonicalize();
        if (candidate > best) best = candidate;
        pow <<= 2;
    }
    return best;
}

BoundReport verify_segner_upper_bound(std::size_t n_max) {
    CatalanTable table = product_recurrence_table(n_max);

    BoundReport report;
    report.bound_name = BoundName::UpperSegner;
    report.checked_up_to = n_max;

    auto violate = [&report](std::size_t n) {
        if (!report.first_violation) report.first_violation = n;
    };

    BigInt pow(1);  // 4^n
    std::optional<std::size_t> first_step_failure;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (table.values[n] > pow) violate(n);
        // Chain head C_{n+1} = sum C_k C_{n-k} <= (n+1) 4^n against the table.
        if (n < n_max) {
            BigInt chain = pow * (static_cast<unsigned long>(n) + 1);
            if (table.values[n + 1] > chain) violate(n + 1);
            // The displayed step (n+1) 4^n <= 4^(n+1) reduces to n + 1 <= 4.
            if (!first_step_failure && n + 1 > 4) first_step_failure = n;
        }
        pow <<= 2;
    }
    report.displayed_step_valid_up_to =
        first_step_failure ? *first_step_failure - 1 : std::min<std::size_t>(n_max, 3);
    report.holds = !report.first_violation.has_value();
    return report;
}

BoundReport verify_lower_central_binomial(std::size_t n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("the central binomial lower bound starts at n = 1");
    }
    CatalanTable table = product_recurrence_table(n_max);

    BoundReport report;
    report.bound_name = BoundName::LowerCentralBinomial;
    report.checked_up_to = n_max;

    BigInt pow(4);  // 4^n
    for (std::size_t n = 1; n <= n_max; ++n) {
        unsigned long odd = 2 * static_cast<unsigned long>(n) + 1;
        BigInt central = binomial(2 * static_cast<unsigned long>(n),
                                  static_cast<unsigned long>(n));
        bool ok = central * odd >= pow &&
                  table.values[n] * odd * (static_cast<unsigned long>(n) + 1) >= pow;
        if (!ok && !report.first_violation) report.first_violation = n;
        pow <<= 2;
    }
    report.holds = !report.first_violation.has_value();
    return report;
}

BoundReport verify_lower_touchard(std::size_t n_max) {
    CatalanTable table = product_recurrence_table(n_max);

    BoundReport report;
    report.bound_name = BoundName::LowerTouchard;
    report.checked_up_to = n_max;

    BigInt pow(1);  // 2^n
    for (std::size_t n = 0; n <= n_max; ++n) {
        // C_n >= 2^(n-1), compared as 2 C_n >= 2^n to stay in integers.
        if (2 * table.values[n] < pow && !report.first_violation) {
            report.first_violation = n;
        }
        pow <<= 1;
    }
    report.holds = !report.first_violation.has_value();
    return report;
}

double root_test(std::size_t n) {
    if (n < 1) throw std::invalid_argument("root_test needs n >= 1");
    BigLog lg = big_log(closed_form(n));
    return static_cast<double>(std::exp(lg.value / static_cast<long double>(n)));
}

BigRat ratio_test_exact(std::size_t n) {
    BigRat ratio(closed_form(n + 1), closed_form(n));
    ratio.canonicalize();
    return ratio;
}

double ratio_test(std::size_t n) {
    return ratio_test_exact(n).get_d();
}

double asymptotic_ratio(std::size_t n) {
    if (n < 1) throw std::invalid_argument("asymptotic_ratio needs n >= 1");
    BigLog lg = big_log(closed_form(n));
    long double log_value =
        lg.value + 1.5L * std::log(static_cast<long double>(n)) +
        0.5L * std::log(std::numbers::pi_v<long double>) -
        static_cast<long double>(n) * 2.0L * std::numbers::ln2_v<long double>;
    return static_cast<double>(std::exp(log_value));
}

RadiusEstimate radius_estimate(std::size_t n) {
    if (n < 2) throw std::invalid_argument("radius_estimate needs n >= 2");
    RadiusEstimate est;
    est.n_used = n;
    est.root_test_value = root_test(n);
    est.ratio_test_value = ratio_test_exact(n);
    est.radius_point_estimate = 1 / est.ratio_test_value;
    est.touchard_only_bracket = {make_rational(1, 4), make_rational(1, 2)};
    est.asymptotic_ratio_value = asymptotic_ratio(n);
    return est;
}

}  // namespace catalan
