#ifndef CRWB_GAUSSIAN_HPP
#define CRWB_GAUSSIAN_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace crwb {

using Rational = mpq_class;

/// Exact element of Q(i): rational real and imaginary parts, kept in
/// canonical form (positive denominators, coprime numerator/denominator)
/// by the underlying GMP rationals.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    /// num/den as a real rational; den must be nonzero.
    static GaussianRational ratio(long num, long den);
    /// The imaginary unit.
    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// Multiplicative inverse; throws std::domain_error on zero.
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Compact display form, e.g. "0", "3/2", "i", "1-2i", "(1/2+i)".
    std::string str() const;

private:
    Rational re_, im_;
};

/// "p/q" with q > 0, emitted even for integers ("3/1").
std::string rational_to_fraction(const Rational& q);

/// Accepts "p" or "p/q"; throws std::invalid_argument on malformed input
/// or zero denominator.
Rational rational_from_fraction(std::string_view s);

}  // namespace crwb

#endif
