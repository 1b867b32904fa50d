#include "apsum/power_sum.hpp"

#include "apsum/bernoulli.hpp"
#include "apsum/special_numbers.hpp"

namespace apsum {

PowerSumSpec::PowerSumSpec(long k, long m, long r) : power(k), step(m), start(r) {
    if (k < 0) throw std::domain_error("power k must be >= 0");
    if (m < 1) throw std::domain_error("step m must be >= 1");
    if (r < 0) throw std::domain_error("start r must be >= 0");
}

PowerSumPolynomial::PowerSumPolynomial(const PowerSumSpec& spec, std::vector<Rat> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != spec_.power + 1)
        throw std::invalid_argument("power-sum polynomial needs exactly k+1 coefficients");
}

const Rat& PowerSumPolynomial::coeff(long t) const {
    if (t < 1 || t > degree())
        throw std::out_of_range("coefficient index t outside 1..k+1");
    return coeffs_[t - 1];
}

Rat PowerSumPolynomial::eval(const Rat& n) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc + *it) * n;
    return acc;
}

Rat direct_sum(const PowerSumSpec& spec, long n) {
    if (n <= 0) throw std::domain_error("direct_sum: n must be >= 1");
    Int sum(0);
    for (long i = 0; i < n; ++i) sum += pow(Int(i * spec.step + spec.start), spec.power);
    return Rat(sum);
}

PowerSumPolynomial coeffs_simple(const PowerSumSpec& spec, SimpleVariant variant) {
    const long k = spec.power;
    const Rat m(spec.step);
    const Rat x = ratio(spec.start, spec.step);  // r/m
    std::vector<Rat> coeffs;
    coeffs.reserve(k + 1);
    for (long t = 1; t <= k + 1; ++t) {
        Rat sum(0);
        if (variant == SimpleVariant::DoubleSum) {
            for (long j = 0; j <= k + 1 - t; ++j) {
                Rat inner(0);
                for (long i = 0; i <= j; ++i) {
                    Rat term = Rat(binomial(Int(j), i)) * pow(i + x, k + 1 - t);
                    inner += (i % 2 == 0) ? term : -term;
                }
                sum += inner / Rat(j + 1);
            }
            sum *= pow(m, k);
        } else {
            for (long j = 0; j <= k + 1 - t; ++j) {
                Rat term = pow(m, j) * ratio(factorial(j), Int(j + 1)) *
                           r_whitney(k + 1 - t, j, spec.step, spec.start);
                sum += (j % 2 == 0) ? term : -term;
            }
            sum *= pow(m, t - 1);
        }
        sum *= ratio(binomial(Int(k + 1), t), Int(k + 1));
        coeffs.push_back(sum);
    }
    return PowerSumPolynomial(spec, std::move(coeffs));
}

PowerSumPolynomial coeffs_griffiths(const PowerSumSpec& spec) {
    const long k = spec.power;
    const Rat x = ratio(spec.start, spec.step);
    const Rat scale = pow(Rat(spec.step), k);
    std::vector<Rat> coeffs;
    coeffs.reserve(k + 1);
    for (long t = 1; t <= k + 1; ++t) {
        Rat sum(0);
        for (long j = t; j <= k + 1; ++j) {
            for (long i = j; i <= k + 1; ++i) {
                Rat term = pow(x, j - t) * Rat(binomial(Int(j), t)) *
                           Rat(Int(stirling1(i, j) * stirling2(k, i - 1)));
                sum += term / Rat(i);
            }
        }
        coeffs.push_back(scale * sum);
    }
    return PowerSumPolynomial(spec, std::move(coeffs));
}

PowerSumPolynomial coeffs_bazso(const PowerSumSpec& spec) {
    const long k = spec.power;
    const Rat m(spec.step);
    std::vector<Rat> coeffs;
    coeffs.reserve(k + 1);
    for (long t = 1; t <= k + 1; ++t) {
        Rat sum(0);
        for (long j = 0; j <= k; ++j) {
            sum += pow(m, j) * r_whitney(k, j, spec.step, spec.start) *
                   Rat(stirling1(j + 1, t)) / Rat(j + 1);
        }
        coeffs.push_back(sum);
    }
    return PowerSumPolynomial(spec, std::move(coeffs));
}

PowerSumPolynomial coeffs_ramirez(const PowerSumSpec& spec) {
    const long k = spec.power;
    std::vector<Rat> coeffs;
    coeffs.reserve(k + 1);
    for (long t = 1; t <= k + 1; ++t) {
        Rat sum(0);
        for (long j = 0; j <= k; ++j) {
            const Int a = a_number(k, k - j, spec.step, spec.start);
            for (long s = t; s <= k + 1; ++s) {
                sum += Rat(Int(a * binomial(Int(s), t))) * pow(Rat(k - j), s - t) *
                       Rat(stirling1(k + 1, s));
            }
        }
        Rat scale = ratio(Int(1), factorial(k + 1));
        if ((k + 1 - t) % 2 != 0) scale = -scale;
        coeffs.push_back(scale * sum);
    }
    return PowerSumPolynomial(spec, std::move(coeffs));
}

PowerSumPolynomial coeffs_from_bernoulli(const PowerSumSpec& spec) {
    const long k = spec.power;
    const Rat x = ratio(spec.start, spec.step);
    const Rat scale = pow(Rat(spec.step), k) / Rat(k + 1);
    std::vector<Rat> coeffs;
    coeffs.reserve(k + 1);
    for (long t = 1; t <= k + 1; ++t)
        coeffs.push_back(scale * Rat(binomial(Int(k + 1), t)) *
                         bernoulli_poly_eval(k + 1 - t, x));
    return PowerSumPolynomial(spec, std::move(coeffs));
}

PowerSumPolynomial coefficients(const PowerSumSpec& spec, CoeffMethod method) {
    switch (method) {
        case CoeffMethod::Simple: return coeffs_simple(spec, SimpleVariant::DoubleSum);
        case CoeffMethod::Whitney: return coeffs_simple(spec, SimpleVariant::WhitneyForm);
        case CoeffMethod::Griffiths: return coeffs_griffiths(spec);
        case CoeffMethod::Bazso: return coeffs_bazso(spec);
        case CoeffMethod::Ramirez: return coeffs_ramirez(spec);
        case CoeffMethod::Bernoulli: return coeffs_from_bernoulli(spec);
    }
    throw std::logic_error("unreachable coefficient method");
}

Rat top_coefficient(const PowerSumSpec& spec, int depth) {
    const long k = spec.power;
    if (depth < 0 || depth > 4)
        throw std::domain_error("top_coefficient: depth must be in 0..4");
    if (k < depth) throw std::domain_error("top_coefficient: requires k >= depth");
    const Rat m(spec.step);
    const Rat r(spec.start);
    switch (depth) {
        case 0:
            return pow(m, k) / Rat(k + 1);
        case 1:
            return pow(m, k - 1) * (r - m / 2);
        case 2:
            return ratio(k, 12) * pow(m, k - 2) * (m * m - 6 * m * r + 6 * r * r);
        case 3:
            return ratio(k * (k - 1), 12) * pow(m, k - 3) * r * (m * m - 3 * m * r + 2 * r * r);
        default:
            // From m^k/(k+1) C(k+1,4) B_4(r/m) with B_4(x) = x^4 - 2x^3 + x^2 - 1/30.
            return ratio(k * (k - 1) * (k - 2), 720) * pow(m, k - 4) *
                   (30 * pow(r, 4) - 60 * m * pow(r, 3) + 30 * m * m * r * r - pow(m, 4));
    }
}

Rat eval_binomial_form(const PowerSumSpec& spec, long n, BinomialForm form) {
    if (n <= 0) throw std::domain_error("eval_binomial_form: n must be >= 1");
    const long k = spec.power;
    const Rat x = ratio(spec.start, spec.step);
    Rat sum(0);
    switch (form) {
        case BinomialForm::Griffiths:
            for (long j = 0; j <= k; ++j)
                sum += Rat(Int(factorial(j) * stirling2(k, j))) *
                       (binomial(n + x, j + 1) - binomial(x, j + 1));
            return pow(Rat(spec.step), k) * sum;
        case BinomialForm::Bazso:
            for (long j = 0; j <= k; ++j)
                sum += Rat(Int(pow(Int(spec.step), j) * factorial(j) * binomial(Int(n), j + 1))) *
                       r_whitney(k, j, spec.step, spec.start);
            return sum;
        default:
            for (long j = 0; j <= k; ++j)
                sum += Rat(Int(a_number(k, k - j, spec.step, spec.start) *
                               binomial(Int(n + j), k + 1)));
            return sum;
    }
}

}  // namespace apsum
