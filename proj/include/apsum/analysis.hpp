#pragma once

#include <string>
#include <vector>

#include "apsum/power_sum.hpp"

namespace apsum {

struct IdentityFailure {
    std::string params;
    std::string lhs;
    std::string rhs;
};

/// Outcome of one identity checked over a parameter grid. Failures are
/// data, not errors: an empty list means the identity held everywhere.
struct IdentityReport {
    std::string identity_id;
    std::string parameter_grid;
    long checked = 0;
    std::vector<IdentityFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Runs the whole cross-check ledger: five-way coefficient agreement, the
/// summation oracle, closed-form top coefficients, the sum rule, and every
/// Bernoulli/Stirling/Whitney identity. Identities parameterized by the
/// power-sum grid use (max_k, m_set, r_set); identities with a natural
/// fixed range (e.g. odd Bernoulli vanishing) state theirs in
/// parameter_grid. Grid points are independent pure computations.
std::vector<IdentityReport> identity_suite(long max_k, const std::vector<long>& m_set,
                                           const std::vector<long>& r_set);

// ---------------------------------------------------------------------------
// Cost profiling.
//
// Each coefficient formula is evaluated with every special number expanded
// into its explicit sum and with all caches bypassed:
//
//   s(k,j)       -> sum_{t=0}^{k-j} sum_{r=0}^{t} (-1)^r/t! C(k+t-1,k+t-j)
//                   C(2k-j,k-t-j) C(t,r) r^{k-j+t}
//   S2(k,j)      -> (1/j!) sum_i (-1)^{j-i} C(j,i) i^k
//   W_{m,r}(k,j) -> (1/(m^j j!)) sum_i (-1)^{j-i} C(j,i) (mi+r)^k
//   A_{m,r}(k,j) -> sum_i (-1)^i C(k+1,i) (m(j-i)+r)^k
//
// power_evals counts scalar pow(base, e >= 0) evaluations performed inside
// summand bodies, including expanded special numbers and their m^j
// normalizers; nothing is cancelled algebraically. Powers in a formula's
// global prefactor (e.g. m^k/(k+1) C(k+1,t)) are outside every summation
// and are not counted. (-1)^x signs and factorials are not pow calls.
// total_terms counts binomial-coefficient evaluations inside summand
// bodies under the same rules.
//
// The expansion is driven at the canonical spec (m=2, r=1); loop bounds
// depend only on (k, t), so every count is independent of m and r.
// ---------------------------------------------------------------------------

enum class FormulaId { Simple6, Whitney7, Griffiths1, Bazso2, Ramirez3, Bernoulli4 };

struct CostReport {
    FormulaId formula_id;
    long k = 0;
    long t = 0;
    long long power_evals = 0;
    long long total_terms = 0;
};

struct CostCounter {
    long long power_evals = 0;
    long long total_terms = 0;
};

const char* formula_name(FormulaId id);

/// c_t by `id` under full expansion, tallying into `counter`. Matches the
/// cached pipelines exactly; exists so the counts measure real work.
Rat expanded_coefficient(FormulaId id, const PowerSumSpec& spec, long t, CostCounter& counter);

/// Deterministic per-formula counts for coefficient c_t, 1 <= t <= k+1.
CostReport cost_profile(FormulaId id, long k, long t);

/// All six formulas profiled and sorted ascending by power_evals, ties
/// kept in FormulaId declaration order.
std::vector<CostReport> compare_costs(long k, long t);

}  // namespace apsum
