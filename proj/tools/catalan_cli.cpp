// Command-line front end: table generation, cross-method verification,
// bound checks, radius estimation, series identity replay, singularity
// location and generator benchmarking, as JSON or CSV records.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "catalan/bounds.hpp"
#include "catalan/sequence.hpp"
#include "catalan/series.hpp"
#include "catalan/singularity.hpp"

namespace {

using json = nlohmann::ordered_json;

json make_record(const std::string& command, json parameters, json results) {
    json record;
    record["schema_version"] = "1";
    record["command"] = command;
    record["parameters"] = std::move(parameters);
    record["results"] = std::move(results);
    return record;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

std::string scalar_to_string(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "";
    return j.dump();
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& value : j) {
            flatten(value, prefix + "[" + std::to_string(i++) + "]", out);
        }
    } else {
        out.emplace_back(prefix, scalar_to_string(j));
    }
}

void emit(const json& record, const std::string& format) {
    if (format == "json") {
        std::cout << record.dump(2) << "\n";
        return;
    }
    // Generic CSV: the whole record flattened to key,value rows. The gen
    // command overrides this with its n,value table shape.
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(record, "", rows);
    std::cout << "key,value\n";
    for (const auto& [key, value] : rows) {
        std::cout << csv_quote(key) << "," << csv_quote(value) << "\n";
    }
}

json residual_to_json(const catalan::SeriesResidual& r) {
    json j;
    j["is_zero"] = r.is_zero();
    if (r.first_failing_index) {
        j["first_failing_index"] = *r.first_failing_index;
    } else {
        j["first_failing_index"] = nullptr;
    }
    j["max_abs_coeff"] = catalan::fraction(r.max_abs_coeff);
    return j;
}

json bound_report_to_json(const catalan::BoundReport& r) {
    json j;
    j["name"] = std::string(catalan::bound_name_string(r.bound_name));
    j["checked_up_to"] = r.checked_up_to;
    j["holds"] = r.holds;
    if (r.first_violation) {
        j["first_violation"] = *r.first_violation;
    } else {
        j["first_violation"] = nullptr;
    }
    if (r.constant_A) j["constant_A"] = catalan::fraction(*r.constant_A);
    if (r.displayed_step_valid_up_to) {
        j["displayed_step_valid_up_to"] = *r.displayed_step_valid_up_to;
    }
    return j;
}

int run_gen(const std::string& method_name, unsigned long n_max,
            const std::string& format) {
    auto method = catalan::method_from_name(method_name);
    auto table = catalan::table_for(*method, n_max);

    if (format == "csv") {
        std::cout << "n,value\n";
        for (std::size_t n = 0; n < table.values.size(); ++n) {
            std::cout << n << "," << catalan::decimal(table.values[n]) << "\n";
        }
        return 0;
    }

    json values = json::array();
    for (const auto& v : table.values) values.push_back(catalan::decimal(v));
    json results;
    results["method"] = method_name;
    results["cost_class"] = std::string(catalan::method_cost_class(*method));
    results["max_index"] = table.max_index();
    results["values"] = std::move(values);
    emit(make_record("gen",
                     {{"method", method_name}, {"n_max", n_max}, {"format", format}},
                     results),
         format);
    return 0;
}

int run_verify(unsigned long n_max, const std::string& format) {
    auto cross = catalan::cross_validate(n_max);
    std::size_t order = std::min<std::size_t>(n_max, 512);
    std::size_t cutoff = (order + 1) / 2;
    auto residual = catalan::verify_touchard_derivation(order, cutoff);

    json checks = json::array();
    json cross_check;
    cross_check["name"] = "four_way_generator_agreement";
    cross_check["pass"] = cross.all_agree();
    if (cross.first_disagreement) {
        cross_check["first_disagreement"] = *cross.first_disagreement;
    } else {
        cross_check["first_disagreement"] = nullptr;
    }
    checks.push_back(cross_check);

    json series_check;
    series_check["name"] = "touchard_derivation_residual";
    series_check["order"] = order;
    series_check["term_cutoff"] = cutoff;
    series_check["pass"] = residual.is_zero();
    series_check["residual"] = residual_to_json(residual);
    checks.push_back(series_check);

    bool all_pass = cross.all_agree() && residual.is_zero();
    json results;
    results["n_max"] = n_max;
    results["all_pass"] = all_pass;
    results["checks"] = std::move(checks);
    emit(make_record("verify", {{"n_max", n_max}, {"format", format}}, results), format);
    return all_pass ? 0 : 1;
}

int run_bounds(unsigned long n_max, const std::string& format) {
    std::vector<catalan::BoundReport> reports;
    reports.push_back(catalan::verify_upper_bound_induction(catalan::BigRat(1), n_max));
    reports.push_back(catalan::verify_segner_upper_bound(n_max));
    if (n_max >= 1) {
        reports.push_back(catalan::verify_lower_central_binomial(n_max));
    }
    reports.push_back(catalan::verify_lower_touchard(n_max));

    bool all_hold = true;
    json list = json::array();
    for (const auto& r : reports) {
        all_hold = all_hold && r.holds;
        list.push_back(bound_report_to_json(r));
    }
    json results;
    results["n_max"] = n_max;
    results["all_hold"] = all_hold;
    results["bounds"] = std::move(list);
    emit(make_record("bounds", {{"n_max", n_max}, {"format", format}}, results), format);
    return all_hold ? 0 : 1;
}

int run_radius(unsigned long n, const std::string& format) {
    auto est = catalan::radius_estimate(n);
    json results;
    results["n_used"] = est.n_used;
    results["root_test"] = est.root_test_value;
    results["one_over_root_test"] = 1.0 / est.root_test_value;
    results["ratio_test"] = catalan::fraction(est.ratio_test_value);
    results["radius_point_estimate"] = catalan::fraction(est.radius_point_estimate);
    results["touchard_only_bracket"] = {
        {"lo", catalan::fraction(est.touchard_only_bracket.first)},
        {"hi", catalan::fraction(est.touchard_only_bracket.second)},
    };
    results["asymptotic_ratio"] = est.asymptotic_ratio_value;
    emit(make_record("radius", {{"n", n}, {"format", format}}, results), format);
    return 0;
}

int run_series(unsigned long order, const std::string& format) {
    auto w = catalan::fixed_point_series(order);
    auto functional = catalan::functional_equation_residual(w);
    std::size_t cutoff = (order + 1) / 2;
    auto derivation = catalan::verify_touchard_derivation(order, cutoff);

    json results;
    results["order"] = order;
    results["functional_equation"] = residual_to_json(functional);
    json deriv = residual_to_json(derivation);
    deriv["term_cutoff"] = cutoff;
    results["touchard_derivation"] = std::move(deriv);
    emit(make_record("series", {{"order", order}, {"format", format}}, results), format);
    return functional.is_zero() && derivation.is_zero() ? 0 : 1;
}

catalan::PolynomialZ parse_poly(const std::string& text) {
    std::vector<catalan::BigRat> coeffs;
    std::stringstream stream(text);
    std::string piece;
    while (std::getline(stream, piece, ',')) {
        coeffs.push_back(catalan::parse_rational(piece));
    }
    return catalan::PolynomialZ(std::move(coeffs));
}

int run_singular(const std::string& a_text, const std::string& b_text,
                 const std::string& c_text, const std::string& format) {
    catalan::ImplicitQuadratic curve(parse_poly(a_text), parse_poly(b_text),
                                     parse_poly(c_text));
    json results;
    catalan::PolynomialZ discriminant_poly = catalan::discriminant(curve);
    json disc = json::array();
    for (const auto& q : discriminant_poly.coeffs()) {
        disc.push_back(catalan::fraction(q));
    }
    results["discriminant"] = std::move(disc);

    auto located = catalan::locate_singularity(curve);
    results["found_rational"] = located.found_rational();
    if (located.point) {
        results["singular_point"] = {
            {"z_star", catalan::fraction(located.point->z_star)},
            {"w_star", catalan::fraction(located.point->w_star)},
        };
    } else {
        results["singular_point"] = nullptr;
        if (located.non_rational) {
            results["non_rational_interval"] = {
                {"lo", catalan::fraction(located.non_rational->lo)},
                {"hi", catalan::fraction(located.non_rational->hi)},
            };
        }
    }
    emit(make_record("singular",
                     {{"a", a_text}, {"b", b_text}, {"c", c_text}, {"format", format}},
                     results),
         format);
    return 0;
}

int run_bench(const std::string& methods_text, unsigned long n_max,
              unsigned long repeats, const std::string& format) {
    std::vector<catalan::GeneratorMethod> methods;
    std::stringstream stream(methods_text);
    std::string piece;
    while (std::getline(stream, piece, ',')) {
        auto m = catalan::method_from_name(piece);
        if (!m) throw std::invalid_argument("unknown method \"" + piece + "\"");
        methods.push_back(*m);
    }
    if (methods.empty()) throw std::invalid_argument("no methods requested");

    json records = json::array();
    for (auto m : methods) {
        std::vector<std::int64_t> times;
        std::size_t peak_bits = 0;
        for (unsigned long r = 0; r < repeats; ++r) {
            auto start = std::chrono::steady_clock::now();
            auto table = catalan::table_for(m, n_max);
            auto stop = std::chrono::steady_clock::now();
            times.push_back(std::max<std::int64_t>(
                1, std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                       .count()));
            peak_bits = catalan::bit_length(table.values.back());
        }
        std::sort(times.begin(), times.end());
        json record;
        record["method"] = std::string(catalan::method_name(m));
        record["n_max"] = n_max;
        record["wall_time_ns"] = times[times.size() / 2];
        record["peak_value_bits"] = peak_bits;
        records.push_back(std::move(record));
    }
    json results;
    results["records"] = std::move(records);
    emit(make_record("bench",
                     {{"methods", methods_text},
                      {"n_max", n_max},
                      {"repeats", repeats},
                      {"format", format}},
                     results),
         format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Catalan-number toolkit: generators, series identities, "
                 "growth bounds, radius estimators and singularity location"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string method = "closed";
    std::string methods = "closed,segner,touchard,product";
    std::string a_text, b_text, c_text;
    unsigned long n_max = 0;
    unsigned long order = 0;
    unsigned long repeats = 3;

    auto add_format = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* gen = app.add_subcommand("gen", "generate C_0..C_n by one method");
    gen->add_option("--method", method, "generator to use")
        ->required()
        ->check(CLI::IsMember({"closed", "segner", "touchard", "product"}));
    gen->add_option("--n", n_max, "largest index")->required();
    add_format(gen);

    auto* verify = app.add_subcommand(
        "verify", "cross-check all generators and replay the series identity");
    verify->add_option("--n", n_max, "largest index")->required();
    add_format(verify);

    auto* bounds = app.add_subcommand("bounds", "verify the growth bounds");
    bounds->add_option("--n", n_max, "largest index")->required();
    add_format(bounds);

    auto* radius = app.add_subcommand("radius", "root/ratio radius estimators");
    radius->add_option("--n", n_max, "sample index")->required();
    add_format(radius);

    auto* series = app.add_subcommand("series", "exact series residual checks");
    series->add_option("--order", order, "truncation order")->required();
    add_format(series);

    auto* singular =
        app.add_subcommand("singular", "locate the singularity of a w-quadratic curve");
    singular->add_option("--a", a_text, "coefficients of a(z), constant first")
        ->required();
    singular->add_option("--b", b_text, "coefficients of b(z), constant first")
        ->required();
    singular->add_option("--c", c_text, "coefficients of c(z), constant first")
        ->required();
    add_format(singular);

    auto* bench = app.add_subcommand("bench", "time the generators");
    bench->add_option("--methods", methods, "comma-separated generator list");
    bench->add_option("--n", n_max, "largest index")->required();
    bench->add_option("--repeats", repeats, "runs per method; the median is kept")
        ->check(CLI::PositiveNumber);
    add_format(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(method, n_max, format);
        if (verify->parsed()) return run_verify(n_max, format);
        if (bounds->parsed()) return run_bounds(n_max, format);
        if (radius->parsed()) return run_radius(n_max, format);
        if (series->parsed()) return run_series(order, format);
        if (singular->parsed()) return run_singular(a_text, b_text, c_text, format);
        if (bench->parsed()) return run_bench(methods, n_max, repeats, format);
    } catch (const catalan::capacity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
