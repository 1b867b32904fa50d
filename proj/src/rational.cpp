#include "apsum/rational.hpp"

namespace apsum {

Rat ratio(const Int& p, const Int& q) {
    if (q == 0) throw std::domain_error("ratio: zero denominator");
    Rat result(p, q);
    result.canonicalize();
    return result;
}

Rat ratio(long p, long q) { return ratio(Int(p), Int(q)); }

Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    Int result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Int binomial(const Int& n, long j) {
    if (j < 0) throw std::domain_error("binomial: negative lower index");
    Int result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(j));
    return result;
}

Int binomial(long n, long j) { return binomial(Int(n), j); }

Rat binomial(const Rat& x, long j) {
    if (j < 0) throw std::domain_error("binomial: negative lower index");
    if (x.get_den() == 1) return Rat(binomial(Int(x.get_num()), j));
    Rat numerator(1);
    for (long i = 0; i < j; ++i) numerator *= x - i;
    return numerator / Rat(factorial(j));
}

Int pow(const Int& base, long e) {
    if (e < 0) throw std::domain_error("pow: negative exponent");
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return result;
}

Rat pow(const Rat& base, long e) {
    if (e < 0) throw std::domain_error("pow: negative exponent");
    if (e == 0) return Rat(1);  // includes 0^0 = 1
    // num and den are coprime, so num^e and den^e are too: no canonicalize needed.
    Rat result;
    mpz_pow_ui(mpq_numref(result.get_mpq_t()), mpq_numref(base.get_mpq_t()),
               static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(result.get_mpq_t()), mpq_denref(base.get_mpq_t()),
               static_cast<unsigned long>(e));
    return result;
}

bool is_canonical(const Rat& q) {
    if (q.get_den() <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return g == 1;
}

std::string to_string(const Rat& q) { return q.get_str(10); }

std::string to_string(const Int& n) { return n.get_str(10); }

Rat rational_from_string(const std::string& text) {
    Rat value;
    if (value.set_str(text, 10) != 0)
        throw std::invalid_argument("rational_from_string: cannot parse '" + text + "'");
    if (value.get_den() == 0)
        throw std::invalid_argument("rational_from_string: zero denominator in '" + text + "'");
    value.canonicalize();
    return value;
}

}  // namespace apsum
