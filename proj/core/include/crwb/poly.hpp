#ifndef CRWB_POLY_HPP
#define CRWB_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "crwb/gaussian.hpp"

namespace crwb {

/// Variable universe for a model with coordinates (w, z_0, ..., z_k):
/// index 0 is the real variable t (= Im w after the graph substitution),
/// then w, wbar, z_0..z_k, zbar_0..zbar_k.
struct VarSet {
    long k;

    static constexpr std::size_t kT = 0;
    static constexpr std::size_t kW = 1;
    static constexpr std::size_t kWbar = 2;

    std::size_t count() const { return 2 * static_cast<std::size_t>(k + 1) + 3; }
    std::size_t z(long h) const { return 3 + static_cast<std::size_t>(h); }
    std::size_t zbar(long h) const { return 3 + static_cast<std::size_t>(k + 1 + h); }
    bool is_barred(std::size_t v) const { return v == kWbar || v >= zbar(0); }
    /// t -> t, w <-> wbar, z_h <-> zbar_h.
    std::size_t bar_of(std::size_t v) const;
    std::string name(std::size_t v) const;
};

using Mono = std::vector<unsigned>;

/// Graded lexicographic: compare total degree first, then exponents in the
/// fixed variable order.
struct GradedLexLess {
    bool operator()(const Mono& a, const Mono& b) const;
};

/// Sparse multivariate polynomial over Q(i); canonical form keeps no zero
/// coefficients and orders monomials graded-lexicographically.
class Poly {
public:
    explicit Poly(long k) : k_(k) {}
    static Poly constant(long k, GaussianRational c);
    static Poly variable(long k, std::size_t var, unsigned power = 1);

    long k() const { return k_; }
    VarSet vars() const { return VarSet{k_}; }
    bool is_zero() const { return terms_.empty(); }
    long total_degree() const;  // -1 for the zero polynomial
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, GaussianRational, GradedLexLess>& terms() const { return terms_; }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const GaussianRational& c) const;

    Poly derivative(std::size_t var) const;
    /// Swaps every variable with its bar partner and conjugates coefficients.
    Poly bar() const;
    Poly substitute(std::size_t var, const Poly& value) const;
    GaussianRational eval(const std::vector<GaussianRational>& point) const;

    bool uses_variable(std::size_t var) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str() const;

    void add_term(const Mono& m, const GaussianRational& c);

private:
    long k_;
    std::map<Mono, GaussianRational, GradedLexLess> terms_;
};

}  // namespace crwb

#endif
