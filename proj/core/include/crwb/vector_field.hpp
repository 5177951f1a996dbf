#ifndef CRWB_VECTOR_FIELD_HPP
#define CRWB_VECTOR_FIELD_HPP

#include <vector>

#include "crwb/poly.hpp"

namespace crwb {

/// Vector field with holomorphic polynomial coefficients on C^{k+2}:
/// b(w,z) d/dw + sum_h a_h(w,z) d/dz_h. Coefficients never mention t,
/// wbar or the zbar variables.
class HoloField {
public:
    explicit HoloField(long k);

    long k() const { return k_; }
    std::size_t dirs() const { return coeff_.size(); }

    const Poly& w() const { return coeff_[0]; }
    Poly& w() { return coeff_[0]; }
    const Poly& z(long h) const { return coeff_.at(1 + static_cast<std::size_t>(h)); }
    Poly& z(long h) { return coeff_.at(1 + static_cast<std::size_t>(h)); }

    /// Derivation applied to a polynomial in all variables.
    Poly apply(const Poly& p) const;

    bool is_zero() const;
    long max_coeff_degree() const;
    /// True iff every coefficient uses only w and the z variables.
    bool is_holomorphic() const;

    HoloField& operator+=(const HoloField& o);
    HoloField& operator-=(const HoloField& o);
    friend HoloField operator+(HoloField a, const HoloField& b) { return a += b; }
    friend HoloField operator-(HoloField a, const HoloField& b) { return a -= b; }
    HoloField operator-() const;
    HoloField scaled(const GaussianRational& c) const;

    friend bool operator==(const HoloField& a, const HoloField& b) {
        return a.k_ == b.k_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const HoloField& a, const HoloField& b) { return !(a == b); }

    std::string str() const;

private:
    long k_;
    std::vector<Poly> coeff_;  // [0] = d/dw, [1+h] = d/dz_h
};

/// [a, b] with [a,b](p) = a(b(p)) - b(a(p)).
HoloField field_bracket(const HoloField& a, const HoloField& b);

/// Real vector field: coefficients on d/dw, d/dwbar, d/dz_h, d/dzbar_h with
/// the reality constraint coeff(d/dzbar_h) = bar(coeff(d/dz_h)) (same for w).
class RealField {
public:
    explicit RealField(long k);

    /// Re(Z) in the unnormalized convention Z + conj(Z).
    static RealField real_part(const HoloField& z);

    long k() const { return k_; }
    const Poly& w() const { return coeff_[0]; }
    const Poly& wbar() const { return coeff_[1]; }
    const Poly& z(long h) const { return coeff_.at(2 + static_cast<std::size_t>(h)); }
    const Poly& zbar(long h) const { return coeff_.at(2 + static_cast<std::size_t>(k_ + 1 + h)); }

    Poly apply(const Poly& p) const;

    bool is_zero() const;
    bool satisfies_reality() const;

    RealField& operator+=(const RealField& o);
    RealField& operator-=(const RealField& o);
    friend RealField operator+(RealField a, const RealField& b) { return a += b; }
    friend RealField operator-(RealField a, const RealField& b) { return a -= b; }
    RealField operator-() const;
    RealField scaled(const Rational& c) const;

    friend bool operator==(const RealField& a, const RealField& b) {
        return a.k_ == b.k_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const RealField& a, const RealField& b) { return !(a == b); }

    std::string str() const;

private:
    long k_;
    std::vector<Poly> coeff_;  // w, wbar, z_0..z_k, zbar_0..zbar_k

    friend RealField real_bracket(const RealField& a, const RealField& b);
};

RealField real_bracket(const RealField& a, const RealField& b);

/// rho = (w + wbar)/2 - sum_{h=1..k} (z_0^h zbar_h + zbar_0^h z_h); the model
/// hypersurface is rho = 0, i.e. Re(w) = 2 sum Re(z_0^h zbar_h).
Poly defining_function(long k);

/// sum_{h=1..k} (z_0^h zbar_h + zbar_0^h z_h), the graph value of Re(w).
Poly graph_value(long k);

/// Restriction to the hypersurface: substitutes w = s + it, wbar = s - it
/// with s = graph_value(k) and t free.
Poly restrict_to_hypersurface(const Poly& p);

/// True iff Re(Z) is tangent to the model hypersurface: Z(rho) + bar(Z(rho))
/// vanishes identically after the graph substitution.
bool tangency(const HoloField& z, long k);

/// Same test for an arbitrary real field: R(rho) restricted to the
/// hypersurface vanishes identically.
bool real_tangency(const RealField& r);

}  // namespace crwb

#endif
