#include "catalan/sequence.hpp"

#include <string>

namespace catalan {

namespace {

void check_capacity(std::size_t n_max) {
    if (n_max > kMaxTableIndex) {
        throw capacity_error("table index " + std::to_string(n_max) +
                             " exceeds the supported maximum " +
                             std::to_string(kMaxTableIndex));
    }
}

// Structural invariants every generator output must satisfy:
// C_0 = 1, all entries positive, nondecreasing from n = 1 on.
void check_table(const CatalanTable& t, std::size_t n_max) {
    if (t.values.size() != n_max + 1 || t.values[0] != 1) {
        throw std::logic_error("generator produced a malformed table");
    }
    for (std::size_t n = 0; n < t.values.size(); ++n) {
        bool bad = sgn(t.values[n]) <= 0;
        if (n >= 1 && n + 1 < t.values.size() && t.values[n + 1] < t.values[n]) {
            bad = true;
        }
        if (bad) {
            throw std::logic_error("generator broke a table invariant at index " +
                                   std::to_string(n));
        }
    }
}

}  // namespace

std::string_view method_name(GeneratorMethod m) {
    switch (m) {
        case GeneratorMethod::ClosedForm: return "closed";
        case GeneratorMethod::Segner: return "segner";
        case GeneratorMethod::Touchard: return "touchard";
        case GeneratorMethod::ProductRecurrence: return "product";
    }
    return "unknown";
}

std::string_view method_cost_class(GeneratorMethod m) {
    switch (m) {
        case GeneratorMethod::ClosedForm:
            return "one big binomial plus one exact division per entry";
        case GeneratorMethod::Segner:
            return "quadratic number of big-int multiplications";
        case GeneratorMethod::Touchard:
            return "quadratic, over even binomial indices with shifted big-int terms";
        case GeneratorMethod::ProductRecurrence:
            return "linear number of word-sized multiply/exact-divide steps";
    }
    return "unknown";
}

std::optional<GeneratorMethod> method_from_name(std::string_view name) {
    if (name == "closed") return GeneratorMethod::ClosedForm;
    if (name == "segner") return GeneratorMethod::Segner;
    if (name == "touchard") return GeneratorMethod::Touchard;
    if (name == "product") return GeneratorMethod::ProductRecurrence;
    return std::nullopt;
}

BigInt closed_form(std::size_t n) {
    BigInt b = binomial(2 * static_cast<unsigned long>(n), static_cast<unsigned long>(n));
    BigInt q, r;
    mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t(),
                   static_cast<unsigned long>(n) + 1);
    if (r != 0) {
        throw std::logic_error("binom(2n, n) not divisible by n + 1 at n = " +
                               std::to_string(n));
    }
    return q;
}

CatalanTable closed_form_table(std::size_t n_max) {
    check_capacity(n_max);
    CatalanTable t{{}, GeneratorMethod::ClosedForm};
    t.values.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        t.values.push_back(closed_form(n));
    }
    check_table(t, n_max);
    return t;
}

CatalanTable segner_table(std::size_t n_max) {
    check_capacity(n_max);
    CatalanTable t{{}, GeneratorMethod::Segner};
    t.values.reserve(n_max + 1);
    t.values.emplace_back(1);
    for (std::size_t n = 0; n < n_max; ++n) {
        BigInt acc(0);
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_addmul(acc.get_mpz_t(), t.values[k].get_mpz_t(),
                       t.values[n - k].get_mpz_t());
        }
        t.values.push_back(std::move(acc));
    }
    check_table(t, n_max);
    return t;
}

CatalanTable touchard_table(std::size_t n_max) {
    check_capacity(n_max);
    CatalanTable t{{}, GeneratorMethod::Touchard};
    t.values.reserve(n_max + 1);
    t.values.emplace_back(1);

    // row[j] = binom(n, j); updated in place from the previous row, so each
    // n costs one Pascal extension rather than independent binomials.
    std::vector<BigInt> row;
    row.emplace_back(1);  // n = 0

    BigInt term;
    for (std::size_t n = 0; n < n_max; ++n) {
        if (n > 0) {
            row.emplace_back(1);
            for (std::size_t j = row.size() - 2; j >= 1; --j) {
                row[j] += row[j - 1];
            }
        }
        BigInt acc(0);
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            // binom(n, 2k) * 2^(n-2k) * C_k
            term = row[2 * k] * t.values[k];
            term <<= (n - 2 * k);
            acc += term;
        }
        t.values.push_back(std::move(acc));
    }
    check_table(t, n_max);
    return t;
}

CatalanTable product_recurrence_table(std::size_t n_max) {
    check_capacity(n_max);
    CatalanTable t{{}, GeneratorMethod::ProductRecurrence};
    t.values.reserve(n_max + 1);
    t.values.emplace_back(1);
    for (std::size_t n = 0; n < n_max; ++n) {
        BigInt next = t.values[n] * (2 * (2 * static_cast<unsigned long>(n) + 1));
        if (!mpz_divisible_ui_p(next.get_mpz_t(), static_cast<unsigned long>(n) + 2)) {
            throw std::logic_error(
                "product recurrence step left a remainder at n = " + std::to_string(n));
        }
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(),
                        static_cast<unsigned long>(n) + 2);
        t.values.push_back(std::move(next));
    }
    check_table(t, n_max);
    return t;
}

CatalanTable table_for(GeneratorMethod m, std::size_t n_max) {
    switch (m) {
        case GeneratorMethod::ClosedForm: return closed_form_table(n_max);
        case GeneratorMethod::Segner: return segner_table(n_max);
        case GeneratorMethod::Touchard: return touchard_table(n_max);
        case GeneratorMethod::ProductRecurrence: return product_recurrence_table(n_max);
    }
    throw std::invalid_argument("unknown generator method");
}

BigInt even_binomial_sum(std::size_t n) {
    if (n == 0) {
        throw std::domain_error(
            "even_binomial_sum requires n >= 1: at n = 0 the even-index sum is 1 "
            "while 2^(n-1) is 1/2, so the identity being checked does not hold");
    }
    // Walk binom(n, j) multiplicatively; each step's division is exact.
    BigInt b(1), acc(0);
    for (std::size_t j = 0; j <= n; ++j) {
        if (j % 2 == 0) acc += b;
        if (j < n) {
            b *= static_cast<unsigned long>(n - j);
            mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(),
                            static_cast<unsigned long>(j) + 1);
        }
    }
    return acc;
}

CrossValidationReport cross_validate(std::size_t n_max) {
    const CatalanTable tables[] = {
        closed_form_table(n_max),
        segner_table(n_max),
        touchard_table(n_max),
        product_recurrence_table(n_max),
    };

    CrossValidationReport report;
    report.n_max = n_max;
    report.index_agrees.resize(n_max + 1, true);
    for (std::size_t n = 0; n <= n_max; ++n) {
        bool ok = tables[1].values[n] == tables[0].values[n] &&
                  tables[2].values[n] == tables[0].values[n] &&
                  tables[3].values[n] == tables[0].values[n];
        report.index_agrees[n] = ok;
        if (!ok && !report.first_disagreement) {
            report.first_disagreement = n;
        }
    }
    return report;
}

}  // namespace catalan
