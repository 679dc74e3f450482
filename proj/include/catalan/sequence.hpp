#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "catalan/numbers.hpp"

namespace catalan {

// Largest table index any generator will accept. Requests beyond it fail
// with capacity_error instead of truncating.
inline constexpr std::size_t kMaxTableIndex = 1'000'000;

class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

enum class GeneratorMethod { ClosedForm, Segner, Touchard, ProductRecurrence };

std::string_view method_name(GeneratorMethod m);       // "closed", "segner", ...
std::string_view method_cost_class(GeneratorMethod m); // informational
std::optional<GeneratorMethod> method_from_name(std::string_view name);

// A validated prefix C_0..C_max_index of the Catalan sequence, tagged with
// the generator that produced it. Immutable after construction; safe to
// share across threads for reads.
struct CatalanTable {
    std::vector<BigInt> values;  // index n -> C_n
    GeneratorMethod method;

    std::size_t max_index() const { return values.size() - 1; }
};

// C_n = binom(2n, n) / (n + 1), with the division checked to be exact.
BigInt closed_form(std::size_t n);

// Table builders. Each derives C_1 and everything above from C_0 = 1 alone.
CatalanTable closed_form_table(std::size_t n_max);

// C_{n+1} = sum_{k=0}^{n} C_k * C_{n-k}
CatalanTable segner_table(std::size_t n_max);

// C_{n+1} = sum_{k=0}^{floor(n/2)} binom(n, 2k) * 2^(n-2k) * C_k
// Binomials come from one Pascal row extended in place per n.
CatalanTable touchard_table(std::size_t n_max);

// C_{n+1} = C_n * 2(2n+1) / (n+2); every division must be exact.
CatalanTable product_recurrence_table(std::size_t n_max);

CatalanTable table_for(GeneratorMethod m, std::size_t n_max);

// sum_{k=0}^{floor(n/2)} binom(n, 2k), which equals 2^(n-1). Rejects n = 0,
// where the identity fails (the sum is 1, not 1/2).
BigInt even_binomial_sum(std::size_t n);

struct CrossValidationReport {
    std::size_t n_max = 0;
    std::vector<bool> index_agrees;  // 4-way agreement at each index
    std::optional<std::size_t> first_disagreement;

    bool all_agree() const { return !first_disagreement.has_value(); }
};

// Runs all four generators to n_max and compares element-wise.
// Disagreement is reported, not thrown.
CrossValidationReport cross_validate(std::size_t n_max);

}  // namespace catalan
