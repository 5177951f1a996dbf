#ifndef CRWB_LINALG_HPP
#define CRWB_LINALG_HPP

#include <cstddef>
#include <vector>

#include "crwb/gaussian.hpp"

namespace crwb {

using Vec = std::vector<GaussianRational>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t pos);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const GaussianRational& c, const Vec& v);
Vec vec_conj(const Vec& v);
bool vec_is_zero(const Vec& v);
std::string vec_str(const Vec& v);

/// Dense matrix over Q(i) with fixed dimensions.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const GaussianRational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    GaussianRational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Matrix transpose() const;
    Matrix conj() const;

    Vec apply(const Vec& x) const;  // matrix * column vector
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> a_;
};

struct RrefResult {
    Matrix m;
    std::vector<std::size_t> pivots;
    std::size_t rank;
};

/// Gauss-Jordan reduction to reduced row-echelon form (exact).
RrefResult rref(const Matrix& m);

class Subspace;

/// Right kernel {v : m v = 0}, canonicalized.
Subspace kernel(const Matrix& m);

}  // namespace crwb

#endif
