#include "crwb/gaussian.hpp"

#include <sstream>

namespace crwb {

GaussianRational GaussianRational::ratio(long num, long den) {
    if (den == 0) throw std::domain_error("GaussianRational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("GaussianRational: inverse of zero");
    Rational n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

namespace {

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    if (is_real()) return rational_str(re_);
    std::string im_part;
    if (im_ == 1) {
        im_part = "i";
    } else if (im_ == -1) {
        im_part = "-i";
    } else {
        im_part = rational_str(im_) + "i";
    }
    if (sgn(re_) == 0) return im_part;
    std::string s = "(" + rational_str(re_);
    if (sgn(im_) > 0) s += "+";
    return s + im_part + ")";
}

std::string rational_to_fraction(const Rational& q) {
    Rational canon(q);
    canon.canonicalize();
    return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

Rational rational_from_fraction(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string text(s);
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto valid = [](const std::string& t) {
        if (t.empty()) return false;
        size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) return false;
        for (size_t p = start; p < t.size(); ++p)
            if (!isdigit(static_cast<unsigned char>(t[p]))) return false;
        return true;
    };
    if (!valid(num) || !valid(den))
        throw std::invalid_argument("malformed rational literal: " + text);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal: " + text);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace crwb
