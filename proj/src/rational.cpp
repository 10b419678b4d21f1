#include "ehk/rational.h"

namespace ehk {

Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (rat_is_zero(r)) {
        if (e < 0) throw DivisionByZeroError("0 raised to a negative power");
        return Rational(0);
    }
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), k);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), k);
    out.canonicalize();
    if (e < 0) out = Rational(1) / out;
    return out;
}

bool rat_is_square(const Rational& r) {
    if (sgn(r) < 0) return false;
    return mpz_perfect_square_p(r.get_num_mpz_t()) &&
           mpz_perfect_square_p(r.get_den_mpz_t());
}

Rational rat_sqrt(const Rational& r) {
    if (!rat_is_square(r))
        throw DomainError("square root of " + r.get_str() + " is not rational");
    Rational out;
    mpz_sqrt(out.get_num_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(out.get_den_mpz_t(), r.get_den_mpz_t());
    return out;
}

Rational rat_gcd(const Rational& a, const Rational& b) {
    Integer num, den;
    mpz_gcd(num.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    if (sgn(num) == 0) return Rational(0);
    Rational out(num, den);
    out.canonicalize();
    return out;
}

} // namespace ehk
