#pragma once

#include <vector>

#include "apsum/rational.hpp"

namespace apsum {

/// The progression power sum S(n) = r^k + (m+r)^k + ... + ((n-1)m + r)^k,
/// identified by power k >= 0, common difference (step) m >= 1 and first
/// term (start) r >= 0.
struct PowerSumSpec {
    long power;  // k
    long step;   // m
    long start;  // r

    PowerSumSpec(long k, long m, long r);
};

/// S(n) as a polynomial in n: degree k+1, no constant term, coefficients
/// c_t for t = 1..k+1 stored ascending.
class PowerSumPolynomial {
public:
    PowerSumPolynomial(const PowerSumSpec& spec, std::vector<Rat> coeffs);

    const PowerSumSpec& spec() const { return spec_; }
    long degree() const { return static_cast<long>(coeffs_.size()); }

    /// c_t, t in 1..k+1.
    const Rat& coeff(long t) const;

    /// All coefficients, index i holding c_{i+1}.
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    /// Horner evaluation; exact for any rational point, 0 at n = 0.
    Rat eval(const Rat& n) const;

private:
    PowerSumSpec spec_;
    std::vector<Rat> coeffs_;
};

enum class SimpleVariant {
    DoubleSum,    // c_t = m^k/(k+1) C(k+1,t) sum_j sum_i (-1)^i/(j+1) C(j,i) (i + r/m)^{k+1-t}
    WhitneyForm,  // c_t = m^{t-1}/(k+1) C(k+1,t) sum_j (-1)^j m^j j!/(j+1) W_{m,r}(k+1-t, j)
};

enum class BinomialForm { Griffiths, Bazso, Ramirez };

enum class CoeffMethod { Simple, Whitney, Griffiths, Bazso, Ramirez, Bernoulli };

/// Ground-truth oracle: the literal sum of n powers. Rejects n <= 0.
Rat direct_sum(const PowerSumSpec& spec, long n);

/// The plain double-sum coefficient formula and its r-Whitney rewrite.
PowerSumPolynomial coeffs_simple(const PowerSumSpec& spec,
                                 SimpleVariant variant = SimpleVariant::DoubleSum);

/// c_t = m^k sum_{j=t}^{k+1} sum_{i=j}^{k+1} (1/i) (r/m)^{j-t} C(j,t) s(i,j) S2(k,i-1).
PowerSumPolynomial coeffs_griffiths(const PowerSumSpec& spec);

/// c_t = sum_{j=0}^{k} m^j W_{m,r}(k,j)/(j+1) s(j+1,t).
PowerSumPolynomial coeffs_bazso(const PowerSumSpec& spec);

/// c_t = (-1)^{k+1-t}/(k+1)! sum_{j=0}^{k} sum_{s=t}^{k+1}
///         A_{m,r}(k,k-j) C(s,t) (k-j)^{s-t} s(k+1,s).
PowerSumPolynomial coeffs_ramirez(const PowerSumSpec& spec);

/// c_t = m^k/(k+1) C(k+1,t) B_{k+1-t}(r/m), through bernoulli_poly_eval.
PowerSumPolynomial coeffs_from_bernoulli(const PowerSumSpec& spec);

/// Dispatch by method name.
PowerSumPolynomial coefficients(const PowerSumSpec& spec, CoeffMethod method);

/// Closed forms for the coefficients of highest degree: depth d in 0..4
/// returns c_{k+1-d}, valid for k >= d.
Rat top_coefficient(const PowerSumSpec& spec, int depth);

/// S(n) evaluated through one of the three closed binomial-coefficient
/// forms (no polynomial expansion). Rejects n <= 0.
Rat eval_binomial_form(const PowerSumSpec& spec, long n, BinomialForm form);

}  // namespace apsum
