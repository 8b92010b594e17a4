#include "genocchi/rational.hpp"

#include <cctype>

namespace genocchi {

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class r;
    mpz_pow_ui(r.get_num().get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den().get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    // powers of a canonical fraction stay canonical
    return Rational(std::move(r), already_canonical{});
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

namespace {

bool parse_integer(const std::string& s, mpz_class& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    // mpz_set_str understands '-' but not an explicit '+'.
    return out.set_str(s[0] == '+' ? s.substr(1) : s, 10) == 0;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    mpz_class num, den = 1;
    if (slash == std::string::npos) {
        if (!parse_integer(text, num))
            throw std::invalid_argument("not a rational: \"" + text + "\"");
    } else {
        if (!parse_integer(text.substr(0, slash), num) ||
            !parse_integer(text.substr(slash + 1), den))
            throw std::invalid_argument("not a rational: \"" + text + "\"");
        if (den == 0)
            throw std::invalid_argument("zero denominator: \"" + text + "\"");
    }
    return Rational(num, den);
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class multinomial(unsigned long n, unsigned long a, unsigned long b, unsigned long c) {
    if (a + b + c != n) throw std::invalid_argument("multinomial parts must sum to n");
    return binomial(n, a) * binomial(n - a, b);
}

}  // namespace genocchi
