#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "apsum/analysis.hpp"
#include "apsum/bernoulli.hpp"
#include "apsum/power_sum.hpp"
#include "apsum/special_numbers.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace apsum;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

CoeffMethod parse_method(const std::string& name) {
    if (name == "simple") return CoeffMethod::Simple;
    if (name == "whitney") return CoeffMethod::Whitney;
    if (name == "griffiths") return CoeffMethod::Griffiths;
    if (name == "bazso") return CoeffMethod::Bazso;
    if (name == "ramirez") return CoeffMethod::Ramirez;
    if (name == "bernoulli") return CoeffMethod::Bernoulli;
    throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

std::vector<std::string> coeff_strings(const PowerSumPolynomial& poly) {
    std::vector<std::string> out;
    out.reserve(poly.coeffs().size());
    for (const Rat& c : poly.coeffs()) out.push_back(to_string(c));
    return out;
}

const std::vector<std::string>& method_names() {
    static const std::vector<std::string> names = {"simple",  "whitney", "griffiths",
                                                   "bazso",   "ramirez", "bernoulli"};
    return names;
}

int run_coeffs(long k, long m, long r, const std::string& method, const std::string& format) {
    const PowerSumSpec spec(k, m, r);
    if (method == "all") {
        std::vector<std::vector<std::string>> columns;
        bool agree = true;
        const PowerSumPolynomial reference = coefficients(spec, CoeffMethod::Simple);
        for (const std::string& name : method_names()) {
            PowerSumPolynomial poly = coefficients(spec, parse_method(name));
            agree = agree && poly.coeffs() == reference.coeffs();
            columns.push_back(coeff_strings(poly));
        }
        if (format == "json") {
            json doc;
            doc["k"] = k;
            doc["m"] = m;
            doc["r"] = r;
            json methods;
            for (size_t i = 0; i < columns.size(); ++i) methods[method_names()[i]] = columns[i];
            doc["methods"] = methods;
            doc["agreement"] = agree;
            std::cout << doc.dump() << "\n";
        } else if (format == "csv") {
            std::cout << "method,t,coefficient\n";
            for (size_t i = 0; i < columns.size(); ++i)
                for (size_t t = 0; t < columns[i].size(); ++t)
                    std::cout << method_names()[i] << "," << t + 1 << "," << columns[i][t] << "\n";
        } else {
            for (size_t i = 0; i < columns.size(); ++i) {
                std::cout << method_names()[i] << ":";
                for (const std::string& c : columns[i]) std::cout << " " << c;
                std::cout << "\n";
            }
            std::cout << "agreement: " << (agree ? "OK" : "MISMATCH") << "\n";
        }
        return kExitOk;
    }

    const PowerSumPolynomial poly = coefficients(spec, parse_method(method));
    const std::vector<std::string> coeffs = coeff_strings(poly);
    if (format == "json") {
        json doc;
        doc["k"] = k;
        doc["m"] = m;
        doc["r"] = r;
        doc["method"] = method;
        doc["coeffs"] = coeffs;
        std::cout << doc.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "t,coefficient\n";
        for (size_t t = 0; t < coeffs.size(); ++t) std::cout << t + 1 << "," << coeffs[t] << "\n";
    } else {
        for (size_t t = 0; t < coeffs.size(); ++t)
            std::cout << "t=" << t + 1 << ": " << coeffs[t] << "\n";
    }
    return kExitOk;
}

int run_eval(long k, long m, long r, long n, const std::string& method, bool verify,
             const std::string& format) {
    const PowerSumSpec spec(k, m, r);
    if (n <= 0) throw std::domain_error("n must be >= 1");
    Rat value;
    if (method == "griffiths-form" || method == "bazso-form" || method == "ramirez-form") {
        BinomialForm form = method == "griffiths-form" ? BinomialForm::Griffiths
                            : method == "bazso-form"   ? BinomialForm::Bazso
                                                       : BinomialForm::Ramirez;
        value = eval_binomial_form(spec, n, form);
    } else {
        value = coefficients(spec, parse_method(method)).eval(Rat(n));
    }
    std::string oracle;
    bool match = true;
    if (verify) {
        const Rat direct = direct_sum(spec, n);
        oracle = to_string(direct);
        match = direct == value;
    }
    if (format == "json") {
        json doc;
        doc["k"] = k;
        doc["m"] = m;
        doc["r"] = r;
        doc["n"] = n;
        doc["method"] = method;
        doc["value"] = to_string(value);
        if (verify) {
            doc["oracle"] = oracle;
            doc["match"] = match;
        }
        std::cout << doc.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "k,m,r,n,method,value\n"
                  << k << "," << m << "," << r << "," << n << "," << method << ","
                  << to_string(value) << "\n";
    } else if (verify) {
        std::cout << to_string(value) << " (oracle: " << oracle << ", "
                  << (match ? "OK" : "MISMATCH") << ")\n";
    } else {
        std::cout << to_string(value) << "\n";
    }
    return kExitOk;
}

int run_bernoulli(long k, bool table, bool coeffs, const std::string& format) {
    if (table) {
        if (format == "json") {
            json rows = json::array();
            for (long i = 0; i <= k; ++i)
                rows.push_back({{"k", i}, {"value", to_string(bernoulli_number(i))}});
            std::cout << rows.dump() << "\n";
        } else if (format == "csv") {
            std::cout << "k,value\n";
            for (long i = 0; i <= k; ++i) std::cout << i << "," << to_string(bernoulli_number(i)) << "\n";
        } else {
            for (long i = 0; i <= k; ++i)
                std::cout << "B_" << i << " = " << to_string(bernoulli_number(i)) << "\n";
        }
        return kExitOk;
    }
    if (coeffs) {
        const std::vector<Rat> vec = bernoulli_poly_coeffs_stirling(k);
        if (format == "json") {
            json doc;
            doc["k"] = k;
            json list = json::array();
            for (const Rat& c : vec) list.push_back(to_string(c));
            doc["coeffs"] = list;
            std::cout << doc.dump() << "\n";
        } else if (format == "csv") {
            std::cout << "j,coefficient\n";
            for (size_t j = 0; j < vec.size(); ++j) std::cout << j << "," << to_string(vec[j]) << "\n";
        } else {
            for (size_t j = 0; j < vec.size(); ++j)
                std::cout << "x^" << j << ": " << to_string(vec[j]) << "\n";
        }
        return kExitOk;
    }
    const Rat value = bernoulli_number(k);
    if (format == "json") {
        json doc;
        doc["k"] = k;
        doc["value"] = to_string(value);
        std::cout << doc.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "k,value\n" << k << "," << to_string(value) << "\n";
    } else {
        std::cout << to_string(value) << "\n";
    }
    return kExitOk;
}

int run_triangle(bool whitney_table, long max_k, long m, long r, const std::string& kindstr,
                 const std::string& format) {
    std::vector<std::vector<std::string>> rows;
    for (long k = 0; k <= max_k; ++k) {
        std::vector<std::string> row;
        for (long j = 0; j <= k; ++j) {
            if (whitney_table)
                row.push_back(to_string(r_whitney(k, j, m, r)));
            else
                row.push_back(to_string(kindstr == "1" ? stirling1(k, j) : stirling2(k, j)));
        }
        rows.push_back(std::move(row));
    }
    if (format == "json") {
        json doc;
        if (whitney_table) {
            doc["m"] = m;
            doc["r"] = r;
        } else {
            doc["kind"] = kindstr == "1" ? 1 : 2;
        }
        doc["max"] = max_k;
        doc["rows"] = rows;
        std::cout << doc.dump() << "\n";
        return kExitOk;
    }
    // CSV is the native dump shape: one row per k, columns j = 0..k.
    const std::string sep = format == "text" ? " " : ",";
    for (const auto& row : rows) {
        for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? sep : "") << row[j];
        std::cout << "\n";
    }
    return kExitOk;
}

int run_verify(long k_max, const std::vector<long>& m_set, const std::vector<long>& r_set) {
    const std::vector<IdentityReport> reports = identity_suite(k_max, m_set, r_set);
    long total_checks = 0;
    bool all_passed = true;
    for (const IdentityReport& report : reports) {
        total_checks += report.checked;
        if (report.passed()) {
            std::cout << "PASS " << report.identity_id << " (" << report.checked << " checks) ["
                      << report.parameter_grid << "]\n";
        } else {
            all_passed = false;
            std::cout << "FAIL " << report.identity_id << " (" << report.failures.size() << "/"
                      << report.checked << " failed) [" << report.parameter_grid << "]\n";
            size_t shown = 0;
            for (const IdentityFailure& f : report.failures) {
                if (++shown > 5) {
                    std::cout << "     ... " << report.failures.size() - 5 << " more\n";
                    break;
                }
                std::cout << "     at " << f.params << ": " << f.lhs << " != " << f.rhs << "\n";
            }
        }
    }
    std::cout << "RESULT: " << (all_passed ? "PASS" : "FAIL") << " (" << reports.size()
              << " identities, " << total_checks << " checks)\n";
    return all_passed ? kExitOk : kExitVerifyFailed;
}

int run_bench(long k_max, long t) {
    std::cout << "formula_id,k,t,power_evals,total_terms\n";
    for (long k = std::max(0L, t - 1); k <= k_max; ++k) {
        for (const CostReport& report : compare_costs(k, t)) {
            std::cout << formula_name(report.formula_id) << "," << report.k << "," << report.t
                      << "," << report.power_evals << "," << report.total_terms << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact coefficients and cross-checks for power sums over arithmetic progressions"};
    app.require_subcommand(1);

    long k = 0, m = 1, r = 0, n = 1;

    auto add_format = [](CLI::App* cmd, std::string& var) {
        cmd->add_option("--format", var, "Output format: text, json or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
    };
    auto add_spec_flags = [&](CLI::App* cmd) {
        cmd->add_option("-k,--power", k, "Power k >= 0")->required();
        cmd->add_option("-m,--step", m, "Common difference m >= 1")->required();
        cmd->add_option("-r,--start", r, "First term r >= 0")->required();
    };

    // coeffs
    auto* coeffs_cmd = app.add_subcommand("coeffs", "Coefficient vector of the power-sum polynomial");
    std::string method = "simple";
    std::string coeffs_format = "text";
    add_spec_flags(coeffs_cmd);
    coeffs_cmd->add_option("--method", method,
                           "simple, whitney, griffiths, bazso, ramirez, bernoulli or all");
    add_format(coeffs_cmd, coeffs_format);

    // eval
    auto* eval_cmd = app.add_subcommand("eval", "Evaluate the power sum at n");
    std::string eval_method = "simple";
    std::string eval_format = "text";
    bool verify_flag = false;
    add_spec_flags(eval_cmd);
    eval_cmd->add_option("-n,--terms", n, "Number of terms n >= 1")->required();
    eval_cmd->add_option("--method", eval_method,
                         "Coefficient method, or griffiths-form/bazso-form/ramirez-form");
    eval_cmd->add_flag("--verify", verify_flag, "Cross-check against the literal sum");
    add_format(eval_cmd, eval_format);

    // bernoulli
    auto* bern_cmd = app.add_subcommand("bernoulli", "Bernoulli numbers and polynomial coefficients");
    bool bern_table = false, bern_coeffs = false;
    std::string bern_format = "text";
    bern_cmd->add_option("-k,--power", k, "Index k >= 0")->required();
    bern_cmd->add_flag("--table", bern_table, "Print B_0..B_k");
    bern_cmd->add_flag("--coeffs", bern_coeffs, "Print the coefficients of B_k(x)");
    add_format(bern_cmd, bern_format);

    // stirling
    auto* stirling_cmd = app.add_subcommand("stirling", "Stirling triangle dump");
    std::string kind = "1";
    std::string stirling_format = "csv";
    long max_k = 8;
    stirling_cmd->add_option("--kind", kind, "1 (signed, first kind) or 2 (second kind)")
        ->check(CLI::IsMember({"1", "2"}));
    stirling_cmd->add_option("--max", max_k, "Largest row index")->required();
    add_format(stirling_cmd, stirling_format);

    // whitney
    auto* whitney_cmd = app.add_subcommand("whitney", "r-Whitney triangle dump");
    std::string whitney_format = "csv";
    whitney_cmd->add_option("-m,--step", m, "Parameter m >= 1")->required();
    whitney_cmd->add_option("-r,--start", r, "Parameter r >= 0")->required();
    whitney_cmd->add_option("--max", max_k, "Largest row index")->required();
    add_format(whitney_cmd, whitney_format);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run the identity cross-check ledger");
    long verify_k_max = 12;
    std::vector<long> m_set = {1, 2, 3};
    std::vector<long> r_set = {0, 1, 2, 5};
    verify_cmd->add_option("--k-max", verify_k_max, "Largest power in the grid");
    verify_cmd->add_option("--m-set", m_set, "Common differences to test")->delimiter(',');
    verify_cmd->add_option("--r-set", r_set, "First terms to test")->delimiter(',');

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Per-formula power-evaluation counts (CSV)");
    long bench_k_max = 10, bench_t = 1;
    bench_cmd->add_option("--k-max", bench_k_max, "Largest power to profile")->required();
    bench_cmd->add_option("--t", bench_t, "Coefficient index t >= 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "Run with --help for usage.\n";
        return kExitUsage;
    }

    try {
        if (coeffs_cmd->parsed()) return run_coeffs(k, m, r, method, coeffs_format);
        if (eval_cmd->parsed()) return run_eval(k, m, r, n, eval_method, verify_flag, eval_format);
        if (bern_cmd->parsed()) return run_bernoulli(k, bern_table, bern_coeffs, bern_format);
        if (stirling_cmd->parsed()) return run_triangle(false, max_k, m, r, kind, stirling_format);
        if (whitney_cmd->parsed()) return run_triangle(true, max_k, m, r, kind, whitney_format);
        if (verify_cmd->parsed()) return run_verify(verify_k_max, m_set, r_set);
        if (bench_cmd->parsed()) return run_bench(bench_k_max, bench_t);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
