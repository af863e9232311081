#pragma once

#include "twinspin/rational.hpp"

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

namespace twinspin {

/// Element of Q(i): re + im*i with rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT: implicit lift from Q
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    GaussianRational reciprocal() const;  // throws on zero

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Element of the number field Q(i, sqrt2, sqrt3), stored as
///
///     a + b*sqrt2 + c*sqrt3 + d*sqrt6
///
/// with Gaussian-rational coefficients a, b, c, d. The representation is
/// canonical because {1, sqrt2, sqrt3, sqrt6} is a basis over Q(i); equality
/// is componentwise and exact. Closed under +, *, and inversion. Complex
/// conjugation maps i -> -i and fixes the radicals.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long n) : c_{GaussianRational(Rational(n)), {}, {}, {}} {}  // NOLINT
    explicit ExactScalar(Rational r) : c_{GaussianRational(std::move(r)), {}, {}, {}} {}
    explicit ExactScalar(GaussianRational g) : c_{std::move(g), {}, {}, {}} {}

    static ExactScalar from_components(GaussianRational a, GaussianRational b,
                                       GaussianRational c, GaussianRational d) {
        ExactScalar s;
        s.c_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
        return s;
    }

    static ExactScalar i() { return from_components({Rational(0), Rational(1)}, {}, {}, {}); }
    static ExactScalar sqrt2() { return from_components({}, Rational(1), {}, {}); }
    static ExactScalar sqrt3() { return from_components({}, {}, Rational(1), {}); }
    static ExactScalar sqrt6() { return from_components({}, {}, {}, Rational(1)); }

    /// Coefficient of the k-th basis element, k indexing {1, sqrt2, sqrt3, sqrt6}.
    const GaussianRational& coeff(int k) const { return c_.at(static_cast<size_t>(k)); }

    bool is_zero() const;
    /// True when the imaginary part of every coefficient vanishes.
    bool is_real() const;
    /// True when the value lies in Q (no i, no radicals).
    bool is_rational() const { return c_[0].is_real() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
    /// The value as a Rational; requires is_rational().
    Rational rational_part() const;

    ExactScalar operator-() const;
    ExactScalar conj() const;

    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);  // throws on division by zero

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.c_ == b.c_; }

    /// Exact multiplicative inverse via the radical conjugates: the product of
    /// the three conjugates under sqrt2 -> -sqrt2 and sqrt3 -> -sqrt3 clears
    /// every radical, leaving a Gaussian rational to invert.
    ExactScalar reciprocal() const;  // throws on zero

    /// Galois conjugates within Q(sqrt2, sqrt3) over Q(i).
    ExactScalar conj_sqrt2() const;  // sqrt2 -> -sqrt2 (also flips sqrt6)
    ExactScalar conj_sqrt3() const;  // sqrt3 -> -sqrt3 (also flips sqrt6)

    /// Rounds to a double-precision complex value. The total error is below
    /// one ulp per component (single rounding of a 192-bit evaluation).
    std::complex<double> to_complex() const;

    /// Exact sign of a real field element: -1, 0, or +1. Requires is_real().
    /// Decided by interval evaluation at escalating precision; exact zero is
    /// detected from the representation first, so the loop terminates.
    int sign_of_real() const;

    friend std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

private:
    // Coefficients of {1, sqrt2, sqrt3, sqrt6}.
    std::array<GaussianRational, 4> c_{};
};

}  // namespace twinspin
