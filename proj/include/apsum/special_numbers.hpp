#pragma once

#include <mutex>
#include <vector>

#include "apsum/rational.hpp"

namespace apsum {

enum class TriangleFamily { Stirling1, Stirling2 };

/// Memoized triangle for a two-index recurrence family. Rows are filled on
/// demand, row by row; entries are never rewritten. Queries are serialized
/// internally, so concurrent callers see value-identical results.
class TriangleCache {
public:
    explicit TriangleCache(TriangleFamily family);

    TriangleFamily family() const { return family_; }

    /// Entry (k, j); 0 for j > k. Rejects negative indices.
    Int get(long k, long j);

    /// Copy of row k (columns j = 0..k).
    std::vector<Int> row(long k);

private:
    void extend(long k);  // caller holds mu_

    TriangleFamily family_;
    std::vector<std::vector<Int>> rows_;
    std::mutex mu_;
};

/// Signed Stirling numbers of the first kind, s(k+1, j) = s(k, j-1) - k s(k, j).
/// The falling factorial expands as x(x-1)...(x-k+1) = sum_j s(k,j) x^j.
Int stirling1(long k, long j);

/// Signed Stirling first kind by the explicit double sum
///   s(k,j) = sum_{t=0}^{k-j} sum_{r=0}^{t} (-1)^r/t! C(k+t-1, k+t-j) C(2k-j, k-t-j) C(t,r) r^{k-j+t}.
/// Throws std::logic_error if the rational total fails to be an integer.
Int stirling1_explicit(long k, long j);

/// Stirling numbers of the second kind, S2(k+1, j) = j S2(k, j) + S2(k, j-1).
Int stirling2(long k, long j);

/// r-Stirling second kind S_{2,r}(k+r, j+r) = (1/j!) sum_i (-1)^{j-i} C(j,i) (i+r)^k.
/// Reduces to stirling2(k, j) at r = 0.
Int r_stirling2(long k, long j, long r);

/// r-Whitney second kind W_{m,r}(k,j) = (1/(m^j j!)) sum_i (-1)^{j-i} C(j,i) (mi+r)^k.
/// Rational by definition; integrality over (m, r) is observed, not assumed.
Rat r_whitney(long k, long j, long m, long r);

/// A_{m,r}(k,j) = sum_{i=0}^{j} (-1)^i C(k+1, i) (m(j-i)+r)^k.
Int a_number(long k, long j, long m, long r);

}  // namespace apsum
