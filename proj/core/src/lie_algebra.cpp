#include "crwb/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace crwb {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, const BracketTable& table,
                       std::optional<std::vector<long>> grades)
    : dim_(labels.size()), labels_(std::move(labels)), grades_(std::move(grades)) {
    if (grades_ && grades_->size() != dim_)
        throw std::invalid_argument("grade list does not match dimension");
    table_.assign(dim_ * dim_, Vec(dim_));
    for (const auto& [key, value] : table) {
        auto [i, j] = key;
        if (i >= j) throw std::invalid_argument("bracket table entries must have i < j");
        if (j >= dim_) throw std::invalid_argument("bracket table index out of range");
        if (value.size() != dim_) throw std::invalid_argument("bracket table value has wrong dimension");
        table_[i * dim_ + j] = value;
        table_[j * dim_ + i] = vec_scale(GaussianRational(-1), value);
    }
}

const Vec& LieAlgebra::structure(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_) throw std::invalid_argument("basis index out of range");
    return table_[i * dim_ + j];
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw std::invalid_argument("bracket arguments must have the algebra dimension");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            const Vec& c = structure(i, j);
            GaussianRational f = x[i] * y[j];
            for (std::size_t m = 0; m < dim_; ++m) {
                if (c[m].is_zero()) continue;
                out[m] += f * c[m];
            }
        }
    }
    return out;
}

std::string LieAlgebra::describe(const Vec& v) const {
    if (v.size() != dim_) throw std::invalid_argument("describe: dimension mismatch");
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << " + ";
        if (v[i] == GaussianRational(1)) {
            os << labels_[i];
        } else if (v[i] == GaussianRational(-1)) {
            os << "-" << labels_[i];
        } else {
            os << v[i].str() << "*" << labels_[i];
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

ValidityReport check_jacobi(const LieAlgebra& g) {
    ValidityReport rep;
    std::size_t n = g.dim();
    auto bracket_basis = [&](const Vec& v, std::size_t l) {
        Vec out(n);
        for (std::size_t m = 0; m < n; ++m) {
            if (v[m].is_zero()) continue;
            const Vec& c = g.structure(m, l);
            for (std::size_t t = 0; t < n; ++t) {
                if (c[t].is_zero()) continue;
                out[t] += v[m] * c[t];
            }
        }
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                Vec s = vec_add(vec_add(bracket_basis(g.structure(i, j), l),
                                        bracket_basis(g.structure(j, l), i)),
                                bracket_basis(g.structure(l, i), j));
                if (!vec_is_zero(s)) {
                    std::ostringstream os;
                    os << "Jacobi fails at (" << g.label(i) << ", " << g.label(j) << ", "
                       << g.label(l) << "): residue " << g.describe(s);
                    rep.violations.push_back(os.str());
                }
            }
    return rep;
}

ValidityReport check_grading(const LieAlgebra& g) {
    ValidityReport rep;
    if (!g.grades()) return rep;
    const auto& gr = *g.grades();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            const Vec& c = g.structure(i, j);
            for (std::size_t m = 0; m < g.dim(); ++m) {
                if (c[m].is_zero()) continue;
                if (gr[m] != gr[i] + gr[j]) {
                    std::ostringstream os;
                    os << "grading fails: [" << g.label(i) << ", " << g.label(j)
                       << "] has component " << g.label(m) << " of grade " << gr[m]
                       << ", expected " << gr[i] + gr[j];
                    rep.violations.push_back(os.str());
                }
            }
        }
    return rep;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
    if (s.ambient() != g.dim()) throw std::invalid_argument("subspace/algebra dimension mismatch");
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = a + 1; b < s.dim(); ++b)
            if (!s.contains(g.bracket(s.basis()[a], s.basis()[b]))) return false;
    return true;
}

Subspace AntilinearMap::image(const Subspace& s) const {
    std::vector<Vec> rows;
    rows.reserve(2 * s.dim());
    // s is a complex subspace; apply is antilinear, so images of b and i*b
    // together span the complex image.
    for (const auto& b : s.basis()) {
        rows.push_back(apply(b));
        rows.push_back(apply(vec_scale(GaussianRational::i(), b)));
    }
    return Subspace::span(s.ambient(), rows);
}

InvolutionReport check_involution(const LieAlgebra& g, const AntilinearMap& t) {
    InvolutionReport out;
    std::size_t n = g.dim();
    if (t.dim() != n || t.matrix().cols() != n) {
        out.report.violations.push_back("antilinear map has wrong dimensions");
        return out;
    }
    if (!(t.matrix() * t.matrix().conj() == Matrix::identity(n)))
        out.report.violations.push_back("T conj(T) != identity (not an involution)");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = t.apply(g.structure(i, j));
            Vec rhs = g.bracket(t.matrix().col(i), t.matrix().col(j));
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "automorphism fails on (" << g.label(i) << ", " << g.label(j)
                   << "): tau[x,y] = " << g.describe(lhs) << " but [tau x, tau y] = "
                   << g.describe(rhs);
                out.report.violations.push_back(os.str());
            }
        }

    out.real_form_dim = real_points(Subspace::full(n), t).dim();
    if (out.real_form_dim != n) {
        std::ostringstream os;
        os << "fixed-point set has real dimension " << out.real_form_dim << ", expected " << n;
        out.report.violations.push_back(os.str());
    }
    return out;
}

Vec realify(const Vec& x) {
    std::size_t n = x.size();
    Vec r(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        r[j] = GaussianRational(x[j].re());
        r[n + j] = GaussianRational(x[j].im());
    }
    return r;
}

Vec unrealify(const Vec& xr) {
    if (xr.size() % 2 != 0) throw std::invalid_argument("unrealify: odd dimension");
    std::size_t n = xr.size() / 2;
    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!xr[j].is_real() || !xr[n + j].is_real())
            throw std::invalid_argument("unrealify: entries are not real");
        x[j] = GaussianRational(xr[j].re(), xr[n + j].re());
    }
    return x;
}

Subspace realify_subspace(const Subspace& s) {
    std::vector<Vec> rows;
    for (const auto& b : s.basis()) {
        rows.push_back(realify(b));
        rows.push_back(realify(vec_scale(GaussianRational::i(), b)));
    }
    return Subspace::span(2 * s.ambient(), rows);
}

Subspace real_points(const Subspace& s, const AntilinearMap& t) {
    std::size_t n = t.dim();
    // x = u + iv is fixed iff (Tr - I)u + Ti v = 0 and Ti u - (Tr + I)v = 0.
    Matrix sys(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rational tr = t.matrix().at(i, j).re();
            Rational ti = t.matrix().at(i, j).im();
            sys.at(i, j) = GaussianRational(tr - Rational(i == j ? 1 : 0));
            sys.at(i, n + j) = GaussianRational(ti);
            sys.at(n + i, j) = GaussianRational(ti);
            sys.at(n + i, n + j) = GaussianRational(-tr - Rational(i == j ? 1 : 0));
        }
    Subspace fixed = kernel(sys);
    return fixed.intersect(realify_subspace(s));
}

}  // namespace crwb
