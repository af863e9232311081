#include "twinspin/rational.hpp"

#include <mpfr.h>

#include <ostream>
#include <stdexcept>

namespace twinspin {

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(text));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        return Rational(std::move(num), std::move(den));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw std::domain_error("Rational: reciprocal of zero");
    }
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

double Rational::to_double() const {
    // mpq_get_d truncates; round once at 53 bits for the correctly rounded value.
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_q(x, v_.get_mpq_t(), MPFR_RNDN);
    const double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    return d;
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace twinspin
