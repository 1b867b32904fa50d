#include "apsum/special_numbers.hpp"

namespace apsum {

namespace {

void require_nonnegative(long value, const char* what) {
    if (value < 0) throw std::domain_error(std::string(what) + ": negative argument");
}

void require_positive_step(long m) {
    if (m <= 0) throw std::domain_error("step m must be >= 1");
}

TriangleCache& stirling1_cache() {
    static TriangleCache cache(TriangleFamily::Stirling1);
    return cache;
}

TriangleCache& stirling2_cache() {
    static TriangleCache cache(TriangleFamily::Stirling2);
    return cache;
}

}  // namespace

TriangleCache::TriangleCache(TriangleFamily family) : family_(family) {
    rows_.push_back({Int(1)});
}

void TriangleCache::extend(long k) {
    while (static_cast<long>(rows_.size()) <= k) {
        const long n = static_cast<long>(rows_.size());  // row being built
        const std::vector<Int>& prev = rows_[n - 1];
        std::vector<Int> row(n + 1, Int(0));
        for (long j = 1; j <= n; ++j) {
            const Int above = (j <= n - 1) ? prev[j] : Int(0);
            if (family_ == TriangleFamily::Stirling1)
                row[j] = prev[j - 1] - (n - 1) * above;
            else
                row[j] = prev[j - 1] + j * above;
        }
        rows_.push_back(std::move(row));
    }
}

Int TriangleCache::get(long k, long j) {
    require_nonnegative(k, "triangle row");
    require_nonnegative(j, "triangle column");
    if (j > k) return Int(0);
    std::lock_guard<std::mutex> lock(mu_);
    extend(k);
    return rows_[k][j];
}

std::vector<Int> TriangleCache::row(long k) {
    require_nonnegative(k, "triangle row");
    std::lock_guard<std::mutex> lock(mu_);
    extend(k);
    return rows_[k];
}

Int stirling1(long k, long j) { return stirling1_cache().get(k, j); }

Int stirling2(long k, long j) { return stirling2_cache().get(k, j); }

Int stirling1_explicit(long k, long j) {
    require_nonnegative(k, "stirling1_explicit");
    require_nonnegative(j, "stirling1_explicit");
    Rat total(0);
    for (long t = 0; t <= k - j; ++t) {
        const Rat t_factorial_inv = ratio(Int(1), factorial(t));
        for (long r = 0; r <= t; ++r) {
            Rat term = (r % 2 == 0) ? t_factorial_inv : -t_factorial_inv;
            term *= binomial(Int(k + t - 1), k + t - j);
            term *= binomial(Int(2 * k - j), k - t - j);
            term *= binomial(Int(t), r);
            term *= pow(Rat(r), k - j + t);
            total += term;
        }
    }
    if (total.get_den() != 1)
        throw std::logic_error("stirling1_explicit: non-integer total " + to_string(total));
    return Int(total.get_num());
}

Int r_stirling2(long k, long j, long r) {
    require_nonnegative(k, "r_stirling2");
    require_nonnegative(j, "r_stirling2");
    require_nonnegative(r, "r_stirling2");
    Int sum(0);
    for (long i = 0; i <= j; ++i) {
        Int term = binomial(Int(j), i) * pow(Int(i + r), k);
        sum += ((j - i) % 2 == 0) ? term : -term;
    }
    const Int jf = factorial(j);
    if (!mpz_divisible_p(sum.get_mpz_t(), jf.get_mpz_t()))
        throw std::logic_error("r_stirling2: sum not divisible by j!");
    Int result;
    mpz_divexact(result.get_mpz_t(), sum.get_mpz_t(), jf.get_mpz_t());
    return result;
}

Rat r_whitney(long k, long j, long m, long r) {
    require_positive_step(m);
    require_nonnegative(k, "r_whitney");
    require_nonnegative(j, "r_whitney");
    require_nonnegative(r, "r_whitney");
    Int sum(0);
    for (long i = 0; i <= j; ++i) {
        Int term = binomial(Int(j), i) * pow(Int(m * i + r), k);
        sum += ((j - i) % 2 == 0) ? term : -term;
    }
    return ratio(sum, pow(Int(m), j) * factorial(j));
}

Int a_number(long k, long j, long m, long r) {
    require_positive_step(m);
    require_nonnegative(k, "a_number");
    require_nonnegative(j, "a_number");
    require_nonnegative(r, "a_number");
    Int sum(0);
    for (long i = 0; i <= j; ++i) {
        Int term = binomial(Int(k + 1), i) * pow(Int(m * (j - i) + r), k);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace apsum
