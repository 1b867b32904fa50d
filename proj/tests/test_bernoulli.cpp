#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apsum/bernoulli.hpp"

using namespace apsum;

namespace {

Rat eval_dense(const std::vector<Rat>& coeffs, const Rat& x) {
    Rat acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

TEST_CASE("explicit bernoulli numbers") {
    CHECK_EQ(bernoulli_number(0), Rat(1));
    CHECK_EQ(bernoulli_number(1), ratio(-1, 2));
    CHECK_EQ(bernoulli_number(2), ratio(1, 6));
    CHECK_EQ(bernoulli_number(12), ratio(-691, 2730));
    CHECK_THROWS_AS(bernoulli_number(-1), std::domain_error);
}

TEST_CASE("recurrence oracle") {
    CHECK_EQ(bernoulli_number_recurrence(0), Rat(1));
    CHECK_EQ(bernoulli_number_recurrence(2), ratio(1, 6));
    CHECK_EQ(bernoulli_number_recurrence(7), Rat(0));
    CHECK_EQ(bernoulli_number_recurrence(12), ratio(-691, 2730));
    CHECK_EQ(bernoulli_number_recurrence(30), ratio(8615841276005L, 14322));
}

TEST_CASE("explicit formula equals the recurrence up to 30") {
    for (long k = 0; k <= 30; ++k)
        CHECK_EQ(bernoulli_number(k), bernoulli_number_recurrence(k));
}

TEST_CASE("odd bernoulli numbers vanish") {
    for (long i = 1; i <= 14; ++i) CHECK_EQ(bernoulli_number(2 * i + 1), Rat(0));
}

TEST_CASE("polynomial evaluation") {
    for (long k = 0; k <= 10; ++k) CHECK_EQ(bernoulli_poly_eval(k, Rat(0)), bernoulli_number(k));
    CHECK_EQ(bernoulli_poly_eval(1, ratio(1, 3)), ratio(-1, 6));   // x - 1/2
    CHECK_EQ(bernoulli_poly_eval(2, ratio(1, 2)), ratio(-1, 12));  // x^2 - x + 1/6
}

TEST_CASE("reflection at x = 1") {
    for (long k = 0; k <= 20; ++k) {
        Rat expected = bernoulli_number_recurrence(k);
        if (k % 2 != 0) expected = -expected;
        CHECK_EQ(bernoulli_poly_eval(k, Rat(1)), expected);
    }
}

TEST_CASE("stirling-form coefficient vectors") {
    CHECK(bernoulli_poly_coeffs_stirling(0) == std::vector<Rat>{Rat(1)});
    CHECK(bernoulli_poly_coeffs_stirling(1) == std::vector<Rat>{ratio(-1, 2), Rat(1)});
    CHECK(bernoulli_poly_coeffs_stirling(2) == std::vector<Rat>{ratio(1, 6), Rat(-1), Rat(1)});
    for (long k = 0; k <= 10; ++k)
        CHECK_EQ(bernoulli_poly_coeffs_stirling(k)[0], bernoulli_number(k));
}

TEST_CASE("binomial-form coefficient vectors") {
    CHECK(bernoulli_poly_coeffs_binomial(0) == std::vector<Rat>{Rat(1)});
    CHECK(bernoulli_poly_coeffs_binomial(2) == std::vector<Rat>{ratio(1, 6), Rat(-1), Rat(1)});
    CHECK(bernoulli_poly_coeffs_binomial(3) ==
          std::vector<Rat>{Rat(0), ratio(1, 2), ratio(-3, 2), Rat(1)});
    for (long k = 0; k <= 12; ++k)
        CHECK(bernoulli_poly_coeffs_binomial(k) == bernoulli_poly_coeffs_stirling(k));
}

TEST_CASE("coefficient vectors evaluate like the double sum") {
    std::mt19937_64 rng(0xbe7a11ull);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 12);
    for (long k = 0; k <= 12; ++k) {
        const std::vector<Rat> coeffs = bernoulli_poly_coeffs_stirling(k);
        for (int trial = 0; trial < 20; ++trial) {
            const Rat x = ratio(num(rng), den(rng));
            CHECK_EQ(eval_dense(coeffs, x), bernoulli_poly_eval(k, x));
        }
    }
}
