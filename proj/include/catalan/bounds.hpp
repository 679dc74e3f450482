#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "catalan/numbers.hpp"

namespace catalan {

enum class BoundName { UpperTouchard, UpperSegner, LowerCentralBinomial, LowerTouchard };

std::string_view bound_name_string(BoundName b);

struct BoundReport {
    BoundName bound_name;
    std::size_t checked_up_to = 0;
    bool holds = false;
    std::optional<std::size_t> first_violation;
    std::optional<BigRat> constant_A;
    // UpperSegner only: largest n for which the textbook chain step
    // (n+1) * 4^n <= 4^(n+1) is literally true (it stops at n = 3; the
    // end-to-end inequality C_n <= 4^n is checked against the table instead).
    std::optional<std::size_t> displayed_step_valid_up_to;
};

// Natural log of a huge integer from its bit length plus the leading 64 bits.
// The stated bound is a worst case over truncation, constant rounding and
// the final additions; it stays below 2^-40 for inputs up to 10^6 bits.
struct BigLog {
    long double value = 0.0L;
    long double abs_error_bound = 0.0L;
};

BigLog big_log(const BigInt& x);  // requires x >= 1

// C_n <= A * 4^n by induction: base cases C_0 <= A and C_1 <= 4A, then for
// each 1 <= n < n_max both the step budget (A/2) 4^n <= A 4^(n+1) and the
// concrete C_{n+1} <= A 4^(n+1), all as exact rational comparisons.
BoundReport verify_upper_bound_induction(const BigRat& A, std::size_t n_max);

// The least admissible induction constant: sup of C_n / 4^n over the scan
// range, which C_0 forces to exactly 1.
BigRat minimal_inductive_constant();

// C_n <= 4^n throughout, plus the convolution chain head
// C_{n+1} <= (n+1) 4^n checked against the table.
BoundReport verify_segner_upper_bound(std::size_t n_max);

// binom(2n, n) >= 4^n / (2n+1) and C_n >= 4^n / ((n+1)(2n+1)), n >= 1.
BoundReport verify_lower_central_binomial(std::size_t n_max);

// C_n >= 2^(n-1), including the n = 0 case 1 >= 1/2.
BoundReport verify_lower_touchard(std::size_t n_max);

// C_n^(1/n), evaluated through big_log. Strictly below 4 for finite n.
double root_test(std::size_t n);  // n >= 1

// C_{n+1} / C_n, exact; equals 2(2n+1)/(n+2) after reduction.
BigRat ratio_test_exact(std::size_t n);
double ratio_test(std::size_t n);

// C_n * n^(3/2) * sqrt(pi) / 4^n; tends to 1 from below.
double asymptotic_ratio(std::size_t n);  // n >= 1

struct RadiusEstimate {
    std::size_t n_used = 0;
    double root_test_value = 0.0;
    BigRat ratio_test_value;               // exact
    BigRat radius_point_estimate;          // 1 / ratio_test_value, exact
    std::pair<BigRat, BigRat> touchard_only_bracket;  // exactly [1/4, 1/2]
    double asymptotic_ratio_value = 0.0;
};

// The ratio-test reciprocal is used as the point estimate: it converges
// like 1/n where the root test only manages log(n)/n. Both are carried so
// callers can show the contrast. The bracket is the recurrence-only fact
// and does not depend on n.
RadiusEstimate radius_estimate(std::size_t n);  // n >= 2

}  // namespace catalan
