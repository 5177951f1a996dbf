#include "crwb/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crwb {

std::size_t VarSet::bar_of(std::size_t v) const {
    if (v == kT) return kT;
    if (v == kW) return kWbar;
    if (v == kWbar) return kW;
    std::size_t zb0 = zbar(0);
    if (v >= zb0) return v - (static_cast<std::size_t>(k) + 1);
    return v + (static_cast<std::size_t>(k) + 1);
}

std::string VarSet::name(std::size_t v) const {
    if (v == kT) return "t";
    if (v == kW) return "w";
    if (v == kWbar) return "wb";
    std::size_t zb0 = zbar(0);
    if (v >= zb0) return "zb" + std::to_string(v - zb0);
    return "z" + std::to_string(v - 3);
}

bool GradedLexLess::operator()(const Mono& a, const Mono& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return a < b;
}

Poly Poly::constant(long k, GaussianRational c) {
    Poly p(k);
    if (!c.is_zero()) p.terms_.emplace(Mono(VarSet{k}.count(), 0), std::move(c));
    return p;
}

Poly Poly::variable(long k, std::size_t var, unsigned power) {
    VarSet vs{k};
    if (var >= vs.count()) throw std::invalid_argument("variable index out of range");
    Poly p(k);
    if (power == 0) return constant(k, GaussianRational(1));
    Mono m(vs.count(), 0);
    m[var] = power;
    p.terms_.emplace(std::move(m), GaussianRational(1));
    return p;
}

long Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Mono& top = terms_.rbegin()->first;  // graded order: last term has max degree
    return std::accumulate(top.begin(), top.end(), 0l);
}

void Poly::add_term(const Mono& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    if (k_ != o.k_) throw std::invalid_argument("polynomial variable sets differ");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (k_ != o.k_) throw std::invalid_argument("polynomial variable sets differ");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    if (k_ != o.k_) throw std::invalid_argument("polynomial variable sets differ");
    Poly out(k_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Mono m(ma);
            for (std::size_t v = 0; v < m.size(); ++v) m[v] += mb[v];
            out.add_term(m, ca * cb);
        }
    return out;
}

Poly Poly::operator-() const {
    Poly out(k_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly Poly::scaled(const GaussianRational& c) const {
    Poly out(k_);
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, c * coeff);
    return out;
}

Poly Poly::derivative(std::size_t var) const {
    Poly out(k_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Mono d(m);
        d[var] -= 1;
        out.add_term(d, c * GaussianRational(static_cast<long>(m[var])));
    }
    return out;
}

Poly Poly::bar() const {
    VarSet vs = vars();
    Poly out(k_);
    for (const auto& [m, c] : terms_) {
        Mono b(m.size(), 0);
        for (std::size_t v = 0; v < m.size(); ++v) b[vs.bar_of(v)] = m[v];
        out.add_term(b, c.conj());
    }
    return out;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
    if (k_ != value.k_) throw std::invalid_argument("polynomial variable sets differ");
    // cache powers of the replacement
    std::vector<Poly> powers = {Poly::constant(k_, GaussianRational(1))};
    Poly out(k_);
    for (const auto& [m, c] : terms_) {
        unsigned e = m[var];
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Mono rest(m);
        rest[var] = 0;
        Poly term(k_);
        term.terms_.emplace(std::move(rest), c);
        out += term * powers[e];
    }
    return out;
}

GaussianRational Poly::eval(const std::vector<GaussianRational>& point) const {
    if (point.size() != vars().count()) throw std::invalid_argument("evaluation point has wrong arity");
    GaussianRational total;
    for (const auto& [m, c] : terms_) {
        GaussianRational term = c;
        for (std::size_t v = 0; v < m.size(); ++v)
            for (unsigned e = 0; e < m[v]; ++e) term *= point[v];
        total += term;
    }
    return total;
}

bool Poly::uses_variable(std::size_t var) const {
    for (const auto& [m, c] : terms_)
        if (m[var] != 0) return true;
    return false;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    VarSet vs = vars();
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        bool has_var = false;
        for (auto e : m) has_var |= (e != 0);
        if (!has_var || c != GaussianRational(1)) {
            os << c.str();
            if (has_var) os << "*";
        }
        bool first_var = true;
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (m[v] == 0) continue;
            if (!first_var) os << "*";
            os << vs.name(v);
            if (m[v] > 1) os << "^" << m[v];
            first_var = false;
        }
        first = false;
    }
    return os.str();
}

}  // namespace crwb
