// Acceptance suite: runs every release criterion exactly (no tolerances,
// all arithmetic rational) and prints one PASS/FAIL line per criterion.
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "apsum/analysis.hpp"
#include "apsum/bernoulli.hpp"
#include "apsum/power_sum.hpp"
#include "apsum/special_numbers.hpp"

using namespace apsum;

namespace {

constexpr long kMaxK = 12;
const std::vector<long> kMSet = {1, 2, 3};
const std::vector<long> kRSet = {0, 1, 2, 5};

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(APSUM_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool report_passed(const std::vector<IdentityReport>& reports, const std::string& id,
                   std::string& detail) {
    for (const IdentityReport& report : reports) {
        if (report.identity_id != id) continue;
        if (report.passed()) return true;
        detail = id + " failed at " + report.failures.front().params + ": " +
                 report.failures.front().lhs + " != " + report.failures.front().rhs;
        return false;
    }
    detail = "missing report " + id;
    return false;
}

}  // namespace

int main() {
    // One suite run over the full grid backs most criteria.
    const std::vector<IdentityReport> reports = identity_suite(kMaxK, kMSet, kRSet);

    std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria;

    criteria.emplace_back(
        "1. five-way coefficient agreement (k<=12, m in {1,2,3}, r in {0,1,2,5}, exact)",
        [&](std::string& detail) { return report_passed(reports, "coeffs/five-way-agreement", detail); });

    criteria.emplace_back(
        "2. oracle equivalence of eval_poly and all binomial forms (n=1..30, exact)",
        [&](std::string& detail) { return report_passed(reports, "eval/oracle-agreement", detail); });

    criteria.emplace_back(
        "3. closed-form top coefficients match pipelines (depth 0..4, exact)",
        [&](std::string& detail) { return report_passed(reports, "coeffs/top-closed-forms", detail); });

    criteria.emplace_back(
        "4. bernoulli integrity: recurrence match (k<=30), odd vanishing, B_12, reflection",
        [&](std::string& detail) {
            if (!report_passed(reports, "bernoulli/explicit-vs-recurrence", detail)) return false;
            if (!report_passed(reports, "bernoulli/odd-vanishing", detail)) return false;
            if (!report_passed(reports, "bernoulli/reflection", detail)) return false;
            if (bernoulli_number(12) != ratio(-691, 2730)) {
                detail = "B_12 = " + to_string(bernoulli_number(12));
                return false;
            }
            return true;
        });

    criteria.emplace_back(
        "5. remark-1 identities: stirling coefficient vectors and both weight identities (k<=12)",
        [&](std::string& detail) {
            return report_passed(reports, "bernoulli/stirling-vs-binomial-coeffs", detail) &&
                   report_passed(reports, "bernoulli/stirling-coeffs-evaluate", detail) &&
                   report_passed(reports, "bernoulli/binomial-weight-identity", detail) &&
                   report_passed(reports, "bernoulli/binomial-weight-alternative", detail);
        });

    criteria.emplace_back(
        "6. remark-2 identities: whitney representation (k<=10) and r-stirling reduction (r<=3)",
        [&](std::string& detail) {
            return report_passed(reports, "bernoulli/whitney-representation", detail) &&
                   report_passed(reports, "bernoulli/r-stirling-reduction", detail);
        });

    criteria.emplace_back(
        "7. remark-3 identities: coefficient sum rule and bernoulli sum identity on the grid",
        [&](std::string& detail) {
            return report_passed(reports, "coeffs/sum-rule", detail) &&
                   report_passed(reports, "bernoulli/sum-identity-at-progression-ratio", detail);
        });

    criteria.emplace_back(
        "8. explicit stirling-first-kind formula equals the recurrence (0<=j<=k<=10)",
        [&](std::string& detail) {
            return report_passed(reports, "stirling1/explicit-vs-recurrence", detail);
        });

    criteria.emplace_back(
        "9. cost-profile laws: simple count law (k<=15), dominance at k=10 t=1, determinism",
        [&](std::string& detail) {
            for (long k = 0; k <= 15; ++k) {
                for (long t = 1; t <= k + 1; ++t) {
                    const long long expected = (k + 2 - t) * (k + 3 - t) / 2;
                    const CostReport report = cost_profile(FormulaId::Simple6, k, t);
                    if (report.power_evals != expected) {
                        detail = "simple6 count at k=" + std::to_string(k) +
                                 " t=" + std::to_string(t) + " is " +
                                 std::to_string(report.power_evals) + ", expected " +
                                 std::to_string(expected);
                        return false;
                    }
                }
            }
            const long long simple = cost_profile(FormulaId::Simple6, 10, 1).power_evals;
            for (FormulaId id :
                 {FormulaId::Griffiths1, FormulaId::Bazso2, FormulaId::Ramirez3}) {
                const long long other = cost_profile(id, 10, 1).power_evals;
                if (simple >= other) {
                    detail = std::string("simple6 (") + std::to_string(simple) +
                             ") does not undercut " + formula_name(id) + " (" +
                             std::to_string(other) + ")";
                    return false;
                }
            }
            for (long t : {1L, 4L, 11L}) {
                const auto first = compare_costs(10, t);
                const auto second = compare_costs(10, t);
                for (size_t i = 0; i < first.size(); ++i) {
                    if (first[i].formula_id != second[i].formula_id ||
                        first[i].power_evals != second[i].power_evals ||
                        first[i].total_terms != second[i].total_terms) {
                        detail = "profiling not deterministic at t=" + std::to_string(t);
                        return false;
                    }
                }
            }
            return true;
        });

    criteria.emplace_back(
        "10. cli contract: documented invocations byte-exact, verify over the full grid exits 0",
        [&](std::string& detail) {
            const std::map<std::string, std::string> expected = {
                {"coeffs -k 2 -m 3 -r 1", "t=1: -1/2\nt=2: -3/2\nt=3: 3\n"},
                {"eval -k 2 -m 3 -r 1 -n 4 --verify", "166 (oracle: 166, OK)\n"},
                {"bernoulli -k 1", "-1/2\n"},
            };
            for (const auto& [args, want] : expected) {
                const CliResult got = run_cli(args);
                if (got.exit_code != 0 || got.out != want) {
                    detail = "`" + args + "` produced exit " + std::to_string(got.exit_code) +
                             ", output " + got.out;
                    return false;
                }
            }
            const CliResult verify = run_cli("verify --k-max 12 --m-set 1,2,3 --r-set 0,1,2,5");
            if (verify.exit_code != 0) {
                detail = "verify exited " + std::to_string(verify.exit_code);
                return false;
            }
            return true;
        });

    int failures = 0;
    for (auto& [name, check] : criteria) {
        std::string detail;
        const bool ok = check(detail);
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) {
            ++failures;
            std::cout << "     " << detail << "\n";
        }
    }
    std::cout << (failures == 0 ? "ACCEPTANCE: all criteria passed"
                                : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
