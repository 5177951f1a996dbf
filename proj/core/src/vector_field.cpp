#include "crwb/vector_field.hpp"

#include <sstream>
#include <stdexcept>

namespace crwb {

namespace {

void require_same_k(long a, long b) {
    if (a != b) throw std::invalid_argument("fields live on different model spaces");
}

void require_valid_k(long k) {
    if (k < 1) throw std::invalid_argument("model requires k >= 1");
}

}  // namespace

HoloField::HoloField(long k) : k_(k) {
    require_valid_k(k);
    coeff_.assign(static_cast<std::size_t>(k) + 2, Poly(k));
}

Poly HoloField::apply(const Poly& p) const {
    require_same_k(k_, p.k());
    VarSet vs{k_};
    Poly out(k_);
    out += coeff_[0] * p.derivative(VarSet::kW);
    for (long h = 0; h <= k_; ++h) out += coeff_[1 + static_cast<std::size_t>(h)] * p.derivative(vs.z(h));
    return out;
}

bool HoloField::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

long HoloField::max_coeff_degree() const {
    long d = -1;
    for (const auto& c : coeff_) d = std::max(d, c.total_degree());
    return d;
}

bool HoloField::is_holomorphic() const {
    VarSet vs{k_};
    for (const auto& c : coeff_) {
        if (c.uses_variable(VarSet::kT) || c.uses_variable(VarSet::kWbar)) return false;
        for (long h = 0; h <= k_; ++h)
            if (c.uses_variable(vs.zbar(h))) return false;
    }
    return true;
}

HoloField& HoloField::operator+=(const HoloField& o) {
    require_same_k(k_, o.k_);
    for (std::size_t d = 0; d < coeff_.size(); ++d) coeff_[d] += o.coeff_[d];
    return *this;
}

HoloField& HoloField::operator-=(const HoloField& o) {
    require_same_k(k_, o.k_);
    for (std::size_t d = 0; d < coeff_.size(); ++d) coeff_[d] -= o.coeff_[d];
    return *this;
}

HoloField HoloField::operator-() const {
    HoloField out(k_);
    for (std::size_t d = 0; d < coeff_.size(); ++d) out.coeff_[d] = -coeff_[d];
    return out;
}

HoloField HoloField::scaled(const GaussianRational& c) const {
    HoloField out(k_);
    for (std::size_t d = 0; d < coeff_.size(); ++d) out.coeff_[d] = coeff_[d].scaled(c);
    return out;
}

std::string HoloField::str() const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Poly& c, const std::string& dir) {
        if (c.is_zero()) return;
        if (!first) os << " + ";
        os << "(" << c.str() << ")*d/d" << dir;
        first = false;
    };
    emit(coeff_[0], "w");
    for (long h = 0; h <= k_; ++h) emit(coeff_[1 + static_cast<std::size_t>(h)], "z" + std::to_string(h));
    if (first) return "0";
    return os.str();
}

HoloField field_bracket(const HoloField& a, const HoloField& b) {
    require_same_k(a.k(), b.k());
    HoloField out(a.k());
    out.w() = a.apply(b.w()) - b.apply(a.w());
    for (long h = 0; h <= a.k(); ++h) out.z(h) = a.apply(b.z(h)) - b.apply(a.z(h));
    return out;
}

RealField::RealField(long k) : k_(k) {
    require_valid_k(k);
    coeff_.assign(2 * static_cast<std::size_t>(k + 1) + 2, Poly(k));
}

RealField RealField::real_part(const HoloField& z) {
    RealField out(z.k());
    out.coeff_[0] = z.w();
    out.coeff_[1] = z.w().bar();
    for (long h = 0; h <= z.k(); ++h) {
        out.coeff_[2 + static_cast<std::size_t>(h)] = z.z(h);
        out.coeff_[2 + static_cast<std::size_t>(z.k() + 1 + h)] = z.z(h).bar();
    }
    return out;
}

Poly RealField::apply(const Poly& p) const {
    require_same_k(k_, p.k());
    VarSet vs{k_};
    Poly out(k_);
    out += coeff_[0] * p.derivative(VarSet::kW);
    out += coeff_[1] * p.derivative(VarSet::kWbar);
    for (long h = 0; h <= k_; ++h) {
        out += coeff_[2 + static_cast<std::size_t>(h)] * p.derivative(vs.z(h));
        out += coeff_[2 + static_cast<std::size_t>(k_ + 1 + h)] * p.derivative(vs.zbar(h));
    }
    return out;
}

bool RealField::is_zero() const {
    for (const auto& c : coeff_)
        if (!c.is_zero()) return false;
    return true;
}

bool RealField::satisfies_reality() const {
    if (coeff_[1] != coeff_[0].bar()) return false;
    for (long h = 0; h <= k_; ++h)
        if (zbar(h) != z(h).bar()) return false;
    return true;
}

RealField& RealField::operator+=(const RealField& o) {
    require_same_k(k_, o.k_);
    for (std::size_t d = 0; d < coeff_.size(); ++d) coeff_[d] += o.coeff_[d];
    return *this;
}

RealField& RealField::operator-=(const RealField& o) {
    require_same_k(k_, o.k_);
    for (std::size_t d = 0; d < coeff_.size(); ++d) coeff_[d] -= o.coeff_[d];
    return *this;
}

RealField RealField::operator-() const {
    RealField out(k_);
    for (std::size_t d = 0; d < coeff_.size(); ++d) out.coeff_[d] = -coeff_[d];
    return out;
}

RealField RealField::scaled(const Rational& c) const {
    RealField out(k_);
    GaussianRational g(c);
    for (std::size_t d = 0; d < coeff_.size(); ++d) out.coeff_[d] = coeff_[d].scaled(g);
    return out;
}

std::string RealField::str() const {
    std::ostringstream os;
    VarSet vs{k_};
    bool first = true;
    auto emit = [&](const Poly& c, const std::string& dir) {
        if (c.is_zero()) return;
        if (!first) os << " + ";
        os << "(" << c.str() << ")*d/d" << dir;
        first = false;
    };
    emit(coeff_[0], "w");
    emit(coeff_[1], "wb");
    for (long h = 0; h <= k_; ++h) emit(coeff_[2 + static_cast<std::size_t>(h)], vs.name(vs.z(h)));
    for (long h = 0; h <= k_; ++h)
        emit(coeff_[2 + static_cast<std::size_t>(k_ + 1 + h)], vs.name(vs.zbar(h)));
    if (first) return "0";
    return os.str();
}

RealField real_bracket(const RealField& a, const RealField& b) {
    require_same_k(a.k(), b.k());
    RealField out(a.k());
    for (std::size_t d = 0; d < out.coeff_.size(); ++d)
        out.coeff_[d] = a.apply(b.coeff_[d]) - b.apply(a.coeff_[d]);
    return out;
}

Poly defining_function(long k) {
    require_valid_k(k);
    VarSet vs{k};
    GaussianRational half = GaussianRational::ratio(1, 2);
    Poly rho = Poly::variable(k, VarSet::kW).scaled(half) + Poly::variable(k, VarSet::kWbar).scaled(half);
    for (long h = 1; h <= k; ++h) {
        rho -= Poly::variable(k, vs.z(0), static_cast<unsigned>(h)) * Poly::variable(k, vs.zbar(h));
        rho -= Poly::variable(k, vs.zbar(0), static_cast<unsigned>(h)) * Poly::variable(k, vs.z(h));
    }
    return rho;
}

Poly graph_value(long k) {
    require_valid_k(k);
    VarSet vs{k};
    Poly s(k);
    for (long h = 1; h <= k; ++h) {
        s += Poly::variable(k, vs.z(0), static_cast<unsigned>(h)) * Poly::variable(k, vs.zbar(h));
        s += Poly::variable(k, vs.zbar(0), static_cast<unsigned>(h)) * Poly::variable(k, vs.z(h));
    }
    return s;
}

Poly restrict_to_hypersurface(const Poly& p) {
    long k = p.k();
    Poly s = graph_value(k);
    Poly it = Poly::variable(k, VarSet::kT).scaled(GaussianRational::i());
    Poly on_w = p.substitute(VarSet::kW, s + it);
    return on_w.substitute(VarSet::kWbar, s - it);
}

bool tangency(const HoloField& z, long k) {
    require_same_k(z.k(), k);
    Poly p = z.apply(defining_function(k));
    Poly g = p + p.bar();
    return restrict_to_hypersurface(g).is_zero();
}

bool real_tangency(const RealField& r) {
    Poly p = r.apply(defining_function(r.k()));
    return restrict_to_hypersurface(p).is_zero();
}

}  // namespace crwb
