#include "crwb/linalg.hpp"

#include <sstream>
#include <stdexcept>

#include "crwb/subspace.hpp"

namespace crwb {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t pos) {
    Vec v(n);
    v.at(pos) = GaussianRational(1);
    return v;
}

namespace {

void require_same_size(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
}

}  // namespace

Vec vec_add(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    require_same_size(a, b);
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const GaussianRational& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x *= c;
    return r;
}

Vec vec_conj(const Vec& v) {
    Vec r(v);
    for (auto& x : r) x = x.conj();
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

Vec Matrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::conj() const {
    Matrix m(*this);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conj();
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix/vector dimension mismatch");
    Vec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || x[j].is_zero()) continue;
            y[i] += at(i, j) * x[j];
        }
    return y;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            if (at(i, l).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(l, j).is_zero()) continue;
                m.at(i, j) += at(i, l) * o.at(l, j);
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
    Matrix m(*this);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) m.a_[i] += o.a_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff dimension mismatch");
    Matrix m(*this);
    for (std::size_t i = 0; i < rows_ * cols_; ++i) m.a_[i] -= o.a_[i];
    return m;
}

RrefResult rref(const Matrix& input) {
    Matrix m(input);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        GaussianRational inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            GaussianRational f = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots), r};
}

Subspace kernel(const Matrix& m) {
    RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v(m.cols());
        v[c] = GaussianRational(1);
        // back-substitute: pivot row i fixes coordinate pivots[i]
        for (std::size_t i = 0; i < red.pivots.size(); ++i)
            v[red.pivots[i]] = -red.m.at(i, c);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

}  // namespace crwb
