#include "dhn/rational.hpp"

#include <ostream>

namespace dhn {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw precondition_error("Rational: cannot parse '" + s + "'");
    }
}

std::string Rational::str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::str_plain() const {
    if (is_integer()) return v_.get_num().get_str();
    return str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str_plain();
}

Rational pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (r.is_zero()) throw precondition_error("pow: 0 to a negative power");
        return pow(Rational(1) / r, -e);
    }
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), r.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), r.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Integer pow(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    if (n >= 0 && n < k) return 0;
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

Integer double_factorial_odd(long m) {
    // (2m-1)!! for m >= 0; the empty product for m = 0.
    if (m < 0) throw precondition_error("double_factorial_odd: negative m");
    Integer r = 1;
    for (long i = 2 * m - 1; i >= 3; i -= 2) r *= i;
    return r;
}

}  // namespace dhn
