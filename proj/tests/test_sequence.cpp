#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "catalan/sequence.hpp"
#include "oracles.hpp"

using catalan::BigInt;
using catalan::CatalanTable;
using catalan::GeneratorMethod;

namespace {
constexpr std::size_t kPropertyRange = 300;
}

TEST_CASE("closed form: frozen values and brute-force binomial oracle") {
    CHECK(catalan::closed_form(0) == 1);
    CHECK(catalan::closed_form(3) == 5);  // binom(6,3)/4 = 20/4
    CHECK(catalan::closed_form(9) == 4862);
    for (std::size_t n : {0, 1, 2, 5, 9, 17, 40}) {
        CHECK(catalan::closed_form(n) == oracle::catalan_by_definition(n));
    }
}

TEST_CASE("segner: base case, hand-expanded prefix, closed-form cross-check") {
    CHECK(catalan::segner_table(0).values == std::vector<BigInt>{1});

    auto t4 = catalan::segner_table(4);
    CHECK(t4.values == std::vector<BigInt>{1, 1, 2, 5, 14});

    auto t9 = catalan::segner_table(9);
    CHECK(t9.values.back() == 4862);
    CHECK(t9.values.back() == catalan::closed_form(9));
    CHECK(t9.method == GeneratorMethod::Segner);
}

TEST_CASE("touchard: base case, hand-expanded n = 4 sum, segner agreement") {
    CHECK(catalan::touchard_table(1).values == std::vector<BigInt>{1, 1});

    // C_5 via the even-binomial sum at n = 4: 16*1 + 6*4*1 + 1*1*2 = 42.
    auto t5 = catalan::touchard_table(5);
    CHECK(t5.values.back() == 42);

    CHECK(catalan::touchard_table(9).values == catalan::segner_table(9).values);
}

TEST_CASE("product recurrence: prefix and closed-form cross-check at 100") {
    CHECK(catalan::product_recurrence_table(1).values == std::vector<BigInt>{1, 1});
    CHECK(catalan::product_recurrence_table(4).values ==
          std::vector<BigInt>{1, 1, 2, 5, 14});
    auto t = catalan::product_recurrence_table(100);
    CHECK(t.values[100] == catalan::closed_form(100));
}

TEST_CASE("even binomial sum: enumerated oracle and frozen values") {
    CHECK(catalan::even_binomial_sum(1) == 1);
    CHECK(catalan::even_binomial_sum(4) == 8);    // 1 + 6 + 1
    CHECK(catalan::even_binomial_sum(10) == 512); // 2^9

    auto rows = oracle::pascal_triangle(64);
    for (std::size_t n = 1; n <= 64; ++n) {
        BigInt expected(0);
        for (std::size_t k = 0; 2 * k <= n; ++k) expected += rows[n][2 * k];
        CHECK(catalan::even_binomial_sum(n) == expected);
        CHECK(catalan::even_binomial_sum(n) == catalan::pow2(static_cast<unsigned long>(n - 1)));
    }

    CHECK_THROWS_AS(catalan::even_binomial_sum(0), std::domain_error);
}

TEST_CASE("capacity limit is an explicit error, not truncation") {
    CHECK_THROWS_AS(catalan::segner_table(catalan::kMaxTableIndex + 1),
                    catalan::capacity_error);
    CHECK_THROWS_AS(catalan::touchard_table(catalan::kMaxTableIndex + 1),
                    catalan::capacity_error);
    CHECK_THROWS_AS(catalan::product_recurrence_table(catalan::kMaxTableIndex + 1),
                    catalan::capacity_error);
    CHECK_THROWS_AS(catalan::closed_form_table(catalan::kMaxTableIndex + 1),
                    catalan::capacity_error);
}

TEST_CASE("cross validation") {
    auto r0 = catalan::cross_validate(0);
    CHECK(r0.all_agree());
    CHECK(r0.index_agrees == std::vector<bool>{true});

    auto r = catalan::cross_validate(50);
    CHECK(r.all_agree());
    CHECK(!r.first_disagreement.has_value());
    CHECK(r.index_agrees.size() == 51);
}

TEST_CASE("four-way equality and Touchard identity over the property range") {
    auto closed = catalan::closed_form_table(kPropertyRange);
    auto segner = catalan::segner_table(kPropertyRange);
    auto touchard = catalan::touchard_table(kPropertyRange);
    auto product = catalan::product_recurrence_table(kPropertyRange);
    CHECK(segner.values == closed.values);
    CHECK(touchard.values == closed.values);
    CHECK(product.values == closed.values);

    // sum_k binom(n, 2k) 2^(n-2k) C_k == C_{n+1}, with C from the closed form
    // and binomials from the additive oracle triangle.
    auto rows = oracle::pascal_triangle(kPropertyRange);
    for (std::size_t n = 0; n + 1 <= kPropertyRange; ++n) {
        BigInt lhs(0);
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            lhs += rows[n][2 * k] * catalan::pow2(static_cast<unsigned long>(n - 2 * k)) *
                   closed.values[k];
        }
        CHECK(lhs == closed.values[n + 1]);
    }
}

TEST_CASE("segner summand list is a palindrome") {
    auto table = catalan::closed_form_table(64);
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<std::size_t> pick(0, 63);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = pick(rng);
        std::vector<BigInt> summands;
        for (std::size_t k = 0; k <= n; ++k) {
            summands.push_back(table.values[k] * table.values[n - k]);
        }
        std::vector<BigInt> reversed(summands.rbegin(), summands.rend());
        CHECK(summands == reversed);
    }
}

TEST_CASE("monotonicity: C_{n+1} >= C_n with equality only at n = 0") {
    auto t = catalan::product_recurrence_table(kPropertyRange);
    CHECK(t.values[1] == t.values[0]);
    for (std::size_t n = 1; n < kPropertyRange; ++n) {
        CHECK(t.values[n + 1] > t.values[n]);
    }
}

TEST_CASE("method metadata round-trips") {
    for (auto m : {GeneratorMethod::ClosedForm, GeneratorMethod::Segner,
                   GeneratorMethod::Touchard, GeneratorMethod::ProductRecurrence}) {
        auto name = catalan::method_name(m);
        REQUIRE(catalan::method_from_name(name).has_value());
        CHECK(*catalan::method_from_name(name) == m);
        CHECK(!catalan::method_cost_class(m).empty());
    }
    CHECK(!catalan::method_from_name("newton").has_value());
}
