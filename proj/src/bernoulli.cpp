#include "apsum/bernoulli.hpp"

#include <mutex>

#include "apsum/special_numbers.hpp"

namespace apsum {

namespace {

void require_nonnegative(long k) {
    if (k < 0) throw std::domain_error("bernoulli: negative index");
}

// Memoized B_0..B_n from the classical recurrence.
class BernoulliCache {
public:
    Rat get(long k) {
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(numbers_.size()) <= k) {
            const long n = static_cast<long>(numbers_.size());
            Rat sum(0);
            for (long j = 0; j < n; ++j) sum += Rat(binomial(Int(n + 1), j)) * numbers_[j];
            numbers_.push_back(-sum / Rat(n + 1));
        }
        return numbers_[k];
    }

private:
    std::vector<Rat> numbers_{Rat(1)};
    std::mutex mu_;
};

BernoulliCache& cache() {
    static BernoulliCache instance;
    return instance;
}

}  // namespace

Rat bernoulli_number(long k) {
    require_nonnegative(k);
    Rat total(0);
    for (long j = 0; j <= k; ++j) {
        Int inner(0);
        for (long i = 0; i <= j; ++i) {
            Int term = binomial(Int(j), i) * pow(Int(i), k);
            inner += (i % 2 == 0) ? term : -term;
        }
        total += ratio(inner, Int(j + 1));
    }
    return total;
}

Rat bernoulli_number_recurrence(long k) {
    require_nonnegative(k);
    return cache().get(k);
}

Rat bernoulli_poly_eval(long k, const Rat& x) {
    require_nonnegative(k);
    Rat total(0);
    for (long j = 0; j <= k; ++j) {
        Rat inner(0);
        for (long i = 0; i <= j; ++i) {
            Rat term = Rat(binomial(Int(j), i)) * pow(i + x, k);
            inner += (i % 2 == 0) ? term : -term;
        }
        total += inner / Rat(j + 1);
    }
    return total;
}

std::vector<Rat> bernoulli_poly_coeffs_stirling(long k) {
    require_nonnegative(k);
    std::vector<Rat> coeffs;
    coeffs.reserve(k + 1);
    for (long j = 0; j <= k; ++j) {
        Rat c(0);
        for (long i = j; i <= k; ++i)
            c += ratio(Int(j + 1), Int(i + 1)) * Rat(Int(stirling1(i + 1, j + 1) * stirling2(k, i)));
        coeffs.push_back(c);
    }
    return coeffs;
}

std::vector<Rat> bernoulli_poly_coeffs_binomial(long k) {
    require_nonnegative(k);
    std::vector<Rat> coeffs;
    coeffs.reserve(k + 1);
    for (long j = 0; j <= k; ++j)
        coeffs.push_back(Rat(binomial(Int(k), j)) * bernoulli_number_recurrence(k - j));
    return coeffs;
}

}  // namespace apsum
