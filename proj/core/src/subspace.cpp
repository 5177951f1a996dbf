#include "crwb/subspace.hpp"

#include <stdexcept>

namespace crwb {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient dimension mismatch");
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient) { return Subspace(ambient, {}, {}); }

Subspace Subspace::full(std::size_t ambient) {
    std::vector<Vec> rows;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < ambient; ++i) {
        rows.push_back(unit_vec(ambient, i));
        pivots.push_back(i);
    }
    return Subspace(ambient, std::move(rows), std::move(pivots));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("spanning vector has wrong dimension");
    if (vectors.empty()) return zero(ambient);
    RrefResult red = rref(Matrix::from_rows(vectors, ambient));
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < red.rank; ++i) basis.push_back(red.m.row(i));
    return Subspace(ambient, std::move(basis), std::move(red.pivots));
}

std::vector<std::size_t> Subspace::non_pivots() const {
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ambient_; ++c)
        if (!is_pivot[c]) out.push_back(c);
    return out;
}

Subspace Subspace::sum(const Subspace& o) const {
    require_same_ambient(*this, o);
    std::vector<Vec> rows(basis_);
    rows.insert(rows.end(), o.basis_.begin(), o.basis_.end());
    return span(ambient_, rows);
}

// Zassenhaus: rref of [A|A; B|0] — rows with zero left block carry the
// intersection in the right block.
Subspace Subspace::intersect(const Subspace& o) const {
    require_same_ambient(*this, o);
    std::size_t n = ambient_;
    Matrix big(dim() + o.dim(), 2 * n);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            big.at(i, j) = basis_[i][j];
            big.at(i, n + j) = basis_[i][j];
        }
    for (std::size_t i = 0; i < o.dim(); ++i)
        for (std::size_t j = 0; j < n; ++j) big.at(dim() + i, j) = o.basis_[i][j];

    RrefResult red = rref(big);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < red.rank; ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (!red.m.at(i, j).is_zero()) left_zero = false;
        if (!left_zero) continue;
        Vec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = red.m.at(i, n + j);
        rows.push_back(std::move(v));
    }
    return span(n, rows);
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector/ambient dimension mismatch");
    Vec r(v);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const GaussianRational& c = r[pivots_[i]];
        if (c.is_zero()) continue;
        GaussianRational f = c;
        for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
    require_same_ambient(*this, o);
    for (const auto& v : o.basis_)
        if (!contains(v)) return false;
    return true;
}

Vec Subspace::quotient_coords(const Vec& v) const {
    Vec r = reduce(v);
    std::vector<std::size_t> free = non_pivots();
    Vec q(free.size());
    for (std::size_t j = 0; j < free.size(); ++j) q[j] = r[free[j]];
    return q;
}

std::vector<Vec> Subspace::complement_in(const Subspace& larger) const {
    require_same_ambient(*this, larger);
    if (!larger.contains(*this))
        throw std::invalid_argument("complement_in: subspace is not contained in the larger one");
    std::vector<bool> is_pivot(ambient_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t i = 0; i < larger.dim(); ++i)
        if (!is_pivot[larger.pivots()[i]]) out.push_back(larger.basis()[i]);
    return out;
}

}  // namespace crwb
