#pragma once

#include <vector>

#include "apsum/rational.hpp"

namespace apsum {

// Convention throughout: B_1 = -1/2 (the generating function t e^{xt}/(e^t - 1)),
// so B_k(0) = B_k and all odd-index numbers beyond B_1 vanish. Callers used to
// the +1/2 convention should negate B_1.

/// B_k by the explicit double sum
///   B_k = sum_{j=0}^{k} sum_{i=0}^{j} (-1)^i/(j+1) C(j,i) i^k,
/// evaluated as written.
Rat bernoulli_number(long k);

/// B_k by the classical recurrence sum_{j=0}^{k} C(k+1, j) B_j = 0, B_0 = 1.
/// Independent of bernoulli_number; memoized.
Rat bernoulli_number_recurrence(long k);

/// B_k(x) = sum_{j=0}^{k} sum_{i=0}^{j} (-1)^i/(j+1) C(j,i) (i+x)^k.
Rat bernoulli_poly_eval(long k, const Rat& x);

/// Coefficients of B_k(x), ascending powers, length k+1, with the x^j
/// coefficient sum_{i=j}^{k} (j+1)/(i+1) s(i+1, j+1) S2(k, i).
std::vector<Rat> bernoulli_poly_coeffs_stirling(long k);

/// Coefficients of B_k(x) via B_k(x) = sum_j C(k,j) B_{k-j} x^j.
std::vector<Rat> bernoulli_poly_coeffs_binomial(long k);

}  // namespace apsum
