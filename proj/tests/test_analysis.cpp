#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apsum/analysis.hpp"

using namespace apsum;

namespace {

const FormulaId kAllFormulas[] = {FormulaId::Simple6,    FormulaId::Whitney7,
                                  FormulaId::Griffiths1, FormulaId::Bazso2,
                                  FormulaId::Ramirez3,   FormulaId::Bernoulli4};

bool reports_equal(const CostReport& a, const CostReport& b) {
    return a.formula_id == b.formula_id && a.k == b.k && a.t == b.t &&
           a.power_evals == b.power_evals && a.total_terms == b.total_terms;
}

}  // namespace

TEST_CASE("identity suite passes on small grids") {
    for (const IdentityReport& report : identity_suite(4, {1}, {0})) {
        INFO(report.identity_id);
        CHECK(report.passed());
        CHECK(report.checked >= 1);
    }
    for (const IdentityReport& report : identity_suite(0, {1}, {0})) {
        INFO(report.identity_id);
        CHECK(report.passed());
        CHECK(report.checked >= 1);
    }
}

TEST_CASE("identity suite passes on a mixed grid") {
    for (const IdentityReport& report : identity_suite(6, {1, 2, 3}, {0, 1, 2, 5})) {
        INFO(report.identity_id);
        CHECK(report.passed());
    }
}

TEST_CASE("identity suite rejects bad grids") {
    CHECK_THROWS_AS(identity_suite(-1, {1}, {0}), std::domain_error);
    CHECK_THROWS_AS(identity_suite(1, {0}, {0}), std::domain_error);
    CHECK_THROWS_AS(identity_suite(1, {1}, {-2}), std::domain_error);
}

TEST_CASE("simple-formula count law") {
    for (long k = 0; k <= 15; ++k) {
        for (long t = 1; t <= k + 1; ++t) {
            const CostReport report = cost_profile(FormulaId::Simple6, k, t);
            CHECK_EQ(report.power_evals, (k + 2 - t) * (k + 3 - t) / 2);
            CHECK_EQ(report.total_terms, (k + 2 - t) * (k + 3 - t) / 2);
        }
    }
    CHECK_EQ(cost_profile(FormulaId::Simple6, 2, 1).power_evals, 6);
    for (long k = 0; k <= 8; ++k)
        CHECK_EQ(cost_profile(FormulaId::Simple6, k, k + 1).power_evals, 1);
}

TEST_CASE("counts are nonincreasing in t and positive") {
    for (long k = 0; k <= 15; ++k) {
        long long prev = -1;
        for (long t = 1; t <= k + 1; ++t) {
            const long long count = cost_profile(FormulaId::Simple6, k, t).power_evals;
            if (prev >= 0) CHECK(count <= prev);
            prev = count;
        }
    }
    for (FormulaId id : kAllFormulas) {
        CHECK(cost_profile(id, 0, 1).power_evals >= 1);
        CHECK(cost_profile(id, 5, 3).power_evals >= 1);
    }
}

TEST_CASE("frozen regression baselines") {
    // Hand-counted under the documented expansion rules.
    CHECK_EQ(cost_profile(FormulaId::Griffiths1, 2, 1).power_evals, 35);
    CHECK_EQ(cost_profile(FormulaId::Bernoulli4, 2, 1).power_evals, 6);
    // Whitney7: per j, m^j + the expanded W (j+1 inner powers + its m^j normalizer).
    CHECK_EQ(cost_profile(FormulaId::Whitney7, 2, 1).power_evals, 2 * 3 + 6);
}

TEST_CASE("simple formula dominates at t = 1") {
    for (long k = 3; k <= 12; ++k) {
        const long long simple = cost_profile(FormulaId::Simple6, k, 1).power_evals;
        CHECK(simple < cost_profile(FormulaId::Griffiths1, k, 1).power_evals);
        CHECK(simple < cost_profile(FormulaId::Bazso2, k, 1).power_evals);
        CHECK(simple < cost_profile(FormulaId::Ramirez3, k, 1).power_evals);
    }
}

TEST_CASE("profiling is deterministic and spec-independent") {
    for (long t : {1L, 3L}) {
        const auto first = compare_costs(8, t);
        const auto second = compare_costs(8, t);
        REQUIRE_EQ(first.size(), second.size());
        for (size_t i = 0; i < first.size(); ++i) CHECK(reports_equal(first[i], second[i]));
    }
    for (FormulaId id : kAllFormulas) {
        CostCounter a, b, c;
        expanded_coefficient(id, PowerSumSpec(6, 1, 0), 2, a);
        expanded_coefficient(id, PowerSumSpec(6, 2, 1), 2, b);
        expanded_coefficient(id, PowerSumSpec(6, 3, 5), 2, c);
        CHECK_EQ(a.power_evals, b.power_evals);
        CHECK_EQ(b.power_evals, c.power_evals);
        CHECK_EQ(a.total_terms, b.total_terms);
        CHECK_EQ(b.total_terms, c.total_terms);
    }
}

TEST_CASE("expanded evaluation matches the cached pipelines") {
    for (long k = 0; k <= 6; ++k) {
        for (long m : {1L, 2L}) {
            for (long r : {0L, 1L, 5L}) {
                const PowerSumSpec spec(k, m, r);
                const PowerSumPolynomial reference = coeffs_simple(spec);
                for (FormulaId id : kAllFormulas) {
                    for (long t = 1; t <= k + 1; ++t) {
                        CostCounter counter;
                        INFO(formula_name(id) << " k=" << k << " t=" << t);
                        CHECK_EQ(expanded_coefficient(id, spec, t, counter),
                                 reference.coeff(t));
                    }
                }
            }
        }
    }
    // Spot check at the headline comparison point.
    const PowerSumSpec big(10, 3, 2);
    const Rat expected = coeffs_simple(big).coeff(1);
    for (FormulaId id : kAllFormulas) {
        CostCounter counter;
        CHECK_EQ(expanded_coefficient(id, big, 1, counter), expected);
    }
}

TEST_CASE("compare_costs orders ascending with stable ties") {
    const auto reports = compare_costs(10, 1);
    REQUIRE_EQ(reports.size(), 6);
    CHECK_EQ(reports.front().formula_id, FormulaId::Simple6);
    CHECK_EQ(reports[1].formula_id, FormulaId::Bernoulli4);  // equal count, later enum
    for (size_t i = 1; i < reports.size(); ++i)
        CHECK(reports[i - 1].power_evals <= reports[i].power_evals);

    const auto degenerate = compare_costs(0, 1);
    for (const CostReport& r : degenerate) CHECK(r.power_evals >= 1);

    CHECK_EQ(cost_profile(FormulaId::Simple6, 5, 6).power_evals, 1);
}

TEST_CASE("profiler rejects out-of-range t") {
    CHECK_THROWS_AS(cost_profile(FormulaId::Simple6, 3, 0), std::domain_error);
    CHECK_THROWS_AS(cost_profile(FormulaId::Simple6, 3, 5), std::domain_error);
    CHECK_THROWS_AS(cost_profile(FormulaId::Simple6, -1, 1), std::domain_error);
}
