#include "apsum/analysis.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "apsum/bernoulli.hpp"
#include "apsum/special_numbers.hpp"

namespace apsum {

namespace {

// --- cost profiling -------------------------------------------------------

// Counted arithmetic for the fully expanded formulas. Every pow and
// binomial evaluated through this helper sits inside a summand body; the
// callers keep global prefactors on the plain, uncounted routines.
struct Expander {
    CostCounter& c;

    Rat cpow(const Rat& b, long e) {
        ++c.power_evals;
        return pow(b, e);
    }
    Int cpow(const Int& b, long e) {
        ++c.power_evals;
        return pow(b, e);
    }
    Int cbinom(const Int& n, long j) {
        ++c.total_terms;
        return binomial(n, j);
    }

    Rat stirling1(long k, long j) {
        Rat total(0);
        for (long t = 0; t <= k - j; ++t) {
            const Rat t_inv = ratio(Int(1), factorial(t));
            for (long r = 0; r <= t; ++r) {
                Rat term = (r % 2 == 0) ? t_inv : -t_inv;
                term *= cbinom(Int(k + t - 1), k + t - j);
                term *= cbinom(Int(2 * k - j), k - t - j);
                term *= cbinom(Int(t), r);
                term *= cpow(Rat(r), k - j + t);
                total += term;
            }
        }
        return total;
    }

    Rat stirling2(long k, long j) {
        Rat sum(0);
        for (long i = 0; i <= j; ++i) {
            Rat term = Rat(cbinom(Int(j), i)) * Rat(cpow(Int(i), k));
            sum += ((j - i) % 2 == 0) ? term : -term;
        }
        return sum / Rat(factorial(j));
    }

    Rat whitney(long k, long j, long m, long r) {
        Rat sum(0);
        for (long i = 0; i <= j; ++i) {
            Rat term = Rat(cbinom(Int(j), i)) * Rat(cpow(Int(m * i + r), k));
            sum += ((j - i) % 2 == 0) ? term : -term;
        }
        return sum / Rat(Int(cpow(Int(m), j) * factorial(j)));
    }

    Rat a_number(long k, long j, long m, long r) {
        Rat sum(0);
        for (long i = 0; i <= j; ++i) {
            Rat term = Rat(cbinom(Int(k + 1), i)) * Rat(cpow(Int(m * (j - i) + r), k));
            sum += (i % 2 == 0) ? term : -term;
        }
        return sum;
    }
};

// --- identity bookkeeping --------------------------------------------------

class IdentityCheck {
public:
    IdentityCheck(std::string id, std::string grid) {
        report_.identity_id = std::move(id);
        report_.parameter_grid = std::move(grid);
    }

    void expect_eq(const std::string& params, const Rat& lhs, const Rat& rhs) {
        ++report_.checked;
        if (lhs != rhs) report_.failures.push_back({params, to_string(lhs), to_string(rhs)});
    }

    void expect(const std::string& params, bool ok, const std::string& lhs,
                const std::string& rhs) {
        ++report_.checked;
        if (!ok) report_.failures.push_back({params, lhs, rhs});
    }

    IdentityReport take() { return std::move(report_); }

private:
    IdentityReport report_;
};

std::string set_string(const std::vector<long>& values) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << "}";
    return out.str();
}

std::string spec_params(long k, long m, long r) {
    std::ostringstream out;
    out << "k=" << k << " m=" << m << " r=" << r;
    return out.str();
}

std::vector<Rat> seeded_rationals(int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> numerator(-30, 30);
    std::uniform_int_distribution<long> denominator(1, 12);
    std::vector<Rat> values;
    values.reserve(count);
    for (int i = 0; i < count; ++i) values.push_back(ratio(numerator(rng), denominator(rng)));
    return values;
}

Rat eval_dense(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

const char* formula_name(FormulaId id) {
    switch (id) {
        case FormulaId::Simple6: return "simple6";
        case FormulaId::Whitney7: return "whitney7";
        case FormulaId::Griffiths1: return "griffiths1";
        case FormulaId::Bazso2: return "bazso2";
        case FormulaId::Ramirez3: return "ramirez3";
        case FormulaId::Bernoulli4: return "bernoulli4";
    }
    return "?";
}

Rat expanded_coefficient(FormulaId id, const PowerSumSpec& spec, long t, CostCounter& counter) {
    const long k = spec.power;
    if (t < 1 || t > k + 1)
        throw std::domain_error("expanded_coefficient: t must be in 1..k+1");
    Expander ex{counter};
    const Rat m(spec.step);
    const Rat x = ratio(spec.start, spec.step);

    switch (id) {
        case FormulaId::Simple6:
        case FormulaId::Bernoulli4: {
            // Identical summation structure: Bernoulli4 expands B_{k+1-t}(r/m)
            // into the same double sum Simple6 spells out directly.
            Rat sum(0);
            for (long j = 0; j <= k + 1 - t; ++j) {
                Rat inner(0);
                for (long i = 0; i <= j; ++i) {
                    Rat term = Rat(ex.cbinom(Int(j), i)) * ex.cpow(i + x, k + 1 - t);
                    inner += (i % 2 == 0) ? term : -term;
                }
                sum += inner / Rat(j + 1);
            }
            return pow(m, k) / Rat(k + 1) * Rat(binomial(Int(k + 1), t)) * sum;
        }
        case FormulaId::Whitney7: {
            Rat sum(0);
            for (long j = 0; j <= k + 1 - t; ++j) {
                Rat term = ex.cpow(m, j) * ratio(factorial(j), Int(j + 1)) *
                           ex.whitney(k + 1 - t, j, spec.step, spec.start);
                sum += (j % 2 == 0) ? term : -term;
            }
            return pow(m, t - 1) / Rat(k + 1) * Rat(binomial(Int(k + 1), t)) * sum;
        }
        case FormulaId::Griffiths1: {
            Rat sum(0);
            for (long j = t; j <= k + 1; ++j) {
                for (long i = j; i <= k + 1; ++i) {
                    sum += ex.cpow(x, j - t) * Rat(ex.cbinom(Int(j), t)) * ex.stirling1(i, j) *
                           ex.stirling2(k, i - 1) / Rat(i);
                }
            }
            return pow(m, k) * sum;
        }
        case FormulaId::Bazso2: {
            Rat sum(0);
            for (long j = 0; j <= k; ++j) {
                sum += ex.cpow(m, j) * ex.whitney(k, j, spec.step, spec.start) *
                       ex.stirling1(j + 1, t) / Rat(j + 1);
            }
            return sum;
        }
        case FormulaId::Ramirez3: {
            Rat sum(0);
            for (long j = 0; j <= k; ++j) {
                for (long s = t; s <= k + 1; ++s) {
                    sum += ex.a_number(k, k - j, spec.step, spec.start) *
                           Rat(ex.cbinom(Int(s), t)) * ex.cpow(Rat(k - j), s - t) *
                           ex.stirling1(k + 1, s);
                }
            }
            Rat scale = ratio(Int(1), factorial(k + 1));
            if ((k + 1 - t) % 2 != 0) scale = -scale;
            return scale * sum;
        }
    }
    throw std::logic_error("unreachable formula id");
}

CostReport cost_profile(FormulaId id, long k, long t) {
    if (k < 0) throw std::domain_error("cost_profile: k must be >= 0");
    if (t < 1 || t > k + 1) throw std::domain_error("cost_profile: t must be in 1..k+1");
    CostCounter counter;
    expanded_coefficient(id, PowerSumSpec(k, 2, 1), t, counter);
    return {id, k, t, counter.power_evals, counter.total_terms};
}

std::vector<CostReport> compare_costs(long k, long t) {
    std::vector<CostReport> reports;
    for (FormulaId id : {FormulaId::Simple6, FormulaId::Whitney7, FormulaId::Griffiths1,
                         FormulaId::Bazso2, FormulaId::Ramirez3, FormulaId::Bernoulli4})
        reports.push_back(cost_profile(id, k, t));
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CostReport& a, const CostReport& b) {
                         return a.power_evals < b.power_evals;
                     });
    return reports;
}

std::vector<IdentityReport> identity_suite(long max_k, const std::vector<long>& m_set,
                                           const std::vector<long>& r_set) {
    if (max_k < 0) throw std::domain_error("identity_suite: max_k must be >= 0");
    for (long m : m_set)
        if (m < 1) throw std::domain_error("identity_suite: m_set entries must be >= 1");
    for (long r : r_set)
        if (r < 0) throw std::domain_error("identity_suite: r_set entries must be >= 0");

    const std::string grid = "k<=" + std::to_string(max_k) + ", m in " + set_string(m_set) +
                             ", r in " + set_string(r_set);
    std::vector<IdentityReport> reports;

    // Five-way coefficient agreement.
    {
        IdentityCheck check("coeffs/five-way-agreement", grid);
        for (long k = 0; k <= max_k; ++k) {
            for (long m : m_set) {
                for (long r : r_set) {
                    const PowerSumSpec spec(k, m, r);
                    const PowerSumPolynomial reference = coeffs_simple(spec);
                    const std::pair<const char*, PowerSumPolynomial> others[] = {
                        {"whitney", coeffs_simple(spec, SimpleVariant::WhitneyForm)},
                        {"griffiths", coeffs_griffiths(spec)},
                        {"bazso", coeffs_bazso(spec)},
                        {"ramirez", coeffs_ramirez(spec)},
                        {"bernoulli", coeffs_from_bernoulli(spec)},
                    };
                    for (const auto& [name, poly] : others) {
                        bool equal = poly.coeffs() == reference.coeffs();
                        std::string lhs, rhs;
                        if (!equal) {
                            for (long t = 1; t <= k + 1; ++t) {
                                if (poly.coeff(t) != reference.coeff(t)) {
                                    lhs = std::string(name) + " c_" + std::to_string(t) + "=" +
                                          to_string(poly.coeff(t));
                                    rhs = "simple c_" + std::to_string(t) + "=" +
                                          to_string(reference.coeff(t));
                                    break;
                                }
                            }
                        }
                        check.expect(spec_params(k, m, r) + " method=" + name, equal, lhs, rhs);
                    }
                }
            }
        }
        reports.push_back(check.take());
    }

    // Polynomial and closed binomial forms against the literal sum.
    {
        IdentityCheck check("eval/oracle-agreement", grid + ", n=1..30");
        for (long k = 0; k <= max_k; ++k) {
            for (long m : m_set) {
                for (long r : r_set) {
                    const PowerSumSpec spec(k, m, r);
                    const PowerSumPolynomial poly = coeffs_simple(spec);
                    for (long n = 1; n <= 30; ++n) {
                        const Rat oracle = direct_sum(spec, n);
                        const std::string params = spec_params(k, m, r) + " n=" + std::to_string(n);
                        check.expect_eq(params + " route=poly", poly.eval(Rat(n)), oracle);
                        check.expect_eq(params + " route=griffiths-form",
                                        eval_binomial_form(spec, n, BinomialForm::Griffiths),
                                        oracle);
                        check.expect_eq(params + " route=bazso-form",
                                        eval_binomial_form(spec, n, BinomialForm::Bazso), oracle);
                        check.expect_eq(params + " route=ramirez-form",
                                        eval_binomial_form(spec, n, BinomialForm::Ramirez), oracle);
                    }
                }
            }
        }
        reports.push_back(check.take());
    }

    // Closed-form coefficients of highest degree.
    {
        IdentityCheck check("coeffs/top-closed-forms", grid + ", depth=0..4");
        for (long k = 0; k <= max_k; ++k) {
            for (long m : m_set) {
                for (long r : r_set) {
                    const PowerSumSpec spec(k, m, r);
                    const PowerSumPolynomial poly = coeffs_simple(spec);
                    for (int depth = 0; depth <= 4 && depth <= k; ++depth) {
                        check.expect_eq(spec_params(k, m, r) + " depth=" + std::to_string(depth),
                                        top_coefficient(spec, depth), poly.coeff(k + 1 - depth));
                    }
                }
            }
        }
        reports.push_back(check.take());
    }

    // Coefficients sum to r^k (value of the polynomial at n = 1).
    {
        IdentityCheck check("coeffs/sum-rule", grid);
        for (long k = 0; k <= max_k; ++k) {
            for (long m : m_set) {
                for (long r : r_set) {
                    const PowerSumPolynomial poly = coeffs_simple(PowerSumSpec(k, m, r));
                    Rat sum(0);
                    for (const Rat& c : poly.coeffs()) sum += c;
                    check.expect_eq(spec_params(k, m, r), sum, pow(Rat(r), k));
                }
            }
        }
        reports.push_back(check.take());
    }

    // Leading coefficient m^k/(k+1), in particular nonzero.
    {
        IdentityCheck check("coeffs/leading-coefficient", grid);
        for (long k = 0; k <= max_k; ++k) {
            for (long m : m_set) {
                for (long r : r_set) {
                    const PowerSumPolynomial poly = coeffs_simple(PowerSumSpec(k, m, r));
                    const Rat& lead = poly.coeff(k + 1);
                    check.expect_eq(spec_params(k, m, r), lead, pow(Rat(m), k) / Rat(k + 1));
                    check.expect(spec_params(k, m, r) + " nonzero", lead != 0, to_string(lead),
                                 "!= 0");
                }
            }
        }
        reports.push_back(check.take());
    }

    // (1/(k+1)) sum_j C(k+1,j) B_j(r/m) = (r/m)^k.
    {
        IdentityCheck check("bernoulli/sum-identity-at-progression-ratio", grid);
        for (long k = 0; k <= max_k; ++k) {
            for (long m : m_set) {
                for (long r : r_set) {
                    const Rat x = ratio(r, m);
                    Rat sum(0);
                    for (long j = 0; j <= k; ++j)
                        sum += Rat(binomial(Int(k + 1), j)) * bernoulli_poly_eval(j, x);
                    check.expect_eq(spec_params(k, m, r), sum / Rat(k + 1), pow(x, k));
                }
            }
        }
        reports.push_back(check.take());
    }

    // Explicit double sum vs classical recurrence.
    {
        IdentityCheck check("bernoulli/explicit-vs-recurrence", "k<=30");
        for (long k = 0; k <= 30; ++k)
            check.expect_eq("k=" + std::to_string(k), bernoulli_number(k),
                            bernoulli_number_recurrence(k));
        reports.push_back(check.take());
    }

    // Odd-index vanishing.
    {
        IdentityCheck check("bernoulli/odd-vanishing", "B_{2i+1}, i=1..14");
        for (long i = 1; i <= 14; ++i)
            check.expect_eq("i=" + std::to_string(i), bernoulli_number(2 * i + 1), Rat(0));
        reports.push_back(check.take());
    }

    // Reflection B_k(1) = (-1)^k B_k.
    {
        IdentityCheck check("bernoulli/reflection", "k<=20");
        for (long k = 0; k <= 20; ++k) {
            Rat expected = bernoulli_number_recurrence(k);
            if (k % 2 != 0) expected = -expected;
            check.expect_eq("k=" + std::to_string(k), bernoulli_poly_eval(k, Rat(1)), expected);
        }
        reports.push_back(check.take());
    }

    // Stirling coefficient vector of B_k(x) evaluates like the double sum.
    {
        IdentityCheck check("bernoulli/stirling-coeffs-evaluate",
                            "k<=12, 20 seeded rational points");
        const std::vector<Rat> points = seeded_rationals(20, 0x5eedb001ull);
        for (long k = 0; k <= 12; ++k) {
            const std::vector<Rat> coeffs = bernoulli_poly_coeffs_stirling(k);
            for (const Rat& x : points)
                check.expect_eq("k=" + std::to_string(k) + " x=" + to_string(x),
                                eval_dense(coeffs, x), bernoulli_poly_eval(k, x));
        }
        reports.push_back(check.take());
    }

    // Stirling vs binomial coefficient vectors, elementwise.
    {
        IdentityCheck check("bernoulli/stirling-vs-binomial-coeffs", "k<=12");
        for (long k = 0; k <= 12; ++k) {
            const std::vector<Rat> lhs = bernoulli_poly_coeffs_stirling(k);
            const std::vector<Rat> rhs = bernoulli_poly_coeffs_binomial(k);
            for (long j = 0; j <= k; ++j)
                check.expect_eq("k=" + std::to_string(k) + " j=" + std::to_string(j), lhs[j],
                                rhs[j]);
        }
        reports.push_back(check.take());
    }

    // C(k,j) B_{k-j} = (j+1) sum_{i=j}^{k} s(i+1,j+1) S2(k,i)/(i+1).
    {
        IdentityCheck check("bernoulli/binomial-weight-identity", "0<=j<=k<=12");
        for (long k = 0; k <= 12; ++k) {
            for (long j = 0; j <= k; ++j) {
                const Rat lhs = Rat(binomial(Int(k), j)) * bernoulli_number_recurrence(k - j);
                Rat sum(0);
                for (long i = j; i <= k; ++i)
                    sum += ratio(Int(stirling1(i + 1, j + 1) * stirling2(k, i)), Int(i + 1));
                check.expect_eq("k=" + std::to_string(k) + " j=" + std::to_string(j), lhs,
                                Rat(j + 1) * sum);
            }
        }
        reports.push_back(check.take());
    }

    // The alternative weight identity C(k,j) B_{k-j} = k sum_i s(i,j) S2(k-1,i-1)/i.
    {
        IdentityCheck check("bernoulli/binomial-weight-alternative", "1<=j<=k<=12");
        for (long k = 1; k <= 12; ++k) {
            for (long j = 1; j <= k; ++j) {
                const Rat lhs = Rat(binomial(Int(k), j)) * bernoulli_number_recurrence(k - j);
                Rat sum(0);
                for (long i = j; i <= k; ++i)
                    sum += ratio(Int(stirling1(i, j) * stirling2(k - 1, i - 1)), Int(i));
                check.expect_eq("k=" + std::to_string(k) + " j=" + std::to_string(j), lhs,
                                Rat(k) * sum);
            }
        }
        reports.push_back(check.take());
    }

    // (1/(k+1)) sum_j C(k+1,j) B_j(x) = x^k at seeded rational points.
    {
        IdentityCheck check("bernoulli/power-basis-identity", "k<=12, 10 seeded rational points");
        const std::vector<Rat> points = seeded_rationals(10, 0x5eedb002ull);
        for (long k = 0; k <= 12; ++k) {
            for (const Rat& x : points) {
                Rat sum(0);
                for (long j = 0; j <= k; ++j)
                    sum += Rat(binomial(Int(k + 1), j)) * bernoulli_poly_eval(j, x);
                check.expect_eq("k=" + std::to_string(k) + " x=" + to_string(x), sum / Rat(k + 1),
                                pow(x, k));
            }
        }
        reports.push_back(check.take());
    }

    // B_k(r/m) as the alternating r-Whitney sum.
    {
        IdentityCheck check("bernoulli/whitney-representation", "k<=10, m in {1,2,3}, r in {0,1,2}");
        for (long m = 1; m <= 3; ++m) {
            for (long r = 0; r <= 2; ++r) {
                for (long k = 0; k <= 10; ++k) {
                    Rat sum(0);
                    for (long j = 0; j <= k; ++j) {
                        Rat term = ratio(factorial(j), Int(j + 1)) * r_whitney(k, j, m, r) /
                                   pow(Rat(m), k - j);
                        sum += (j % 2 == 0) ? term : -term;
                    }
                    check.expect_eq(spec_params(k, m, r), bernoulli_poly_eval(k, ratio(r, m)),
                                    sum);
                }
            }
        }
        reports.push_back(check.take());
    }

    // The m = 1 reduction through r-Stirling numbers.
    {
        IdentityCheck check("bernoulli/r-stirling-reduction", "k<=10, r<=3");
        for (long r = 0; r <= 3; ++r) {
            for (long k = 0; k <= 10; ++k) {
                Rat sum(0);
                for (long j = 0; j <= k; ++j) {
                    Rat term = ratio(factorial(j), Int(j + 1)) * Rat(r_stirling2(k, j, r));
                    sum += (j % 2 == 0) ? term : -term;
                }
                check.expect_eq("k=" + std::to_string(k) + " r=" + std::to_string(r),
                                bernoulli_poly_eval(k, Rat(r)), sum);
            }
        }
        reports.push_back(check.take());
    }

    // Explicit Stirling-first-kind formula against the recurrence triangle.
    {
        IdentityCheck check("stirling1/explicit-vs-recurrence", "0<=j<=k<=10");
        for (long k = 0; k <= 10; ++k)
            for (long j = 0; j <= k; ++j)
                check.expect_eq("k=" + std::to_string(k) + " j=" + std::to_string(j),
                                Rat(stirling1_explicit(k, j)), Rat(stirling1(k, j)));
        reports.push_back(check.take());
    }

    // W_{1,r}(k,j) matches the r-Stirling numbers.
    {
        IdentityCheck check("whitney/r-stirling-match", "k,j<=8, r<=3");
        for (long r = 0; r <= 3; ++r)
            for (long k = 0; k <= 8; ++k)
                for (long j = 0; j <= 8; ++j)
                    check.expect_eq(
                        "k=" + std::to_string(k) + " j=" + std::to_string(j) + " r=" +
                            std::to_string(r),
                        r_whitney(k, j, 1, r), Rat(r_stirling2(k, j, r)));
        reports.push_back(check.take());
    }

    // Empirical observation: m^j j! W_{m,r}(k,j) lands in the integers.
    {
        IdentityCheck check("whitney/scaled-integrality", grid + ", j<=k");
        for (long k = 0; k <= max_k; ++k) {
            for (long m : m_set) {
                for (long r : r_set) {
                    for (long j = 0; j <= k; ++j) {
                        const Rat scaled =
                            Rat(Int(pow(Int(m), j) * factorial(j))) * r_whitney(k, j, m, r);
                        check.expect(spec_params(k, m, r) + " j=" + std::to_string(j),
                                     scaled.get_den() == 1, to_string(scaled), "integer");
                    }
                }
            }
        }
        reports.push_back(check.take());
    }

    return reports;
}

}  // namespace apsum
