#ifndef CRWB_LIE_ALGEBRA_HPP
#define CRWB_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crwb/subspace.hpp"

namespace crwb {

struct ValidityReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Finite-dimensional complex Lie algebra given by structure constants on a
/// fixed basis. The table is stored for i < j; antisymmetry supplies the rest.
/// Gradings are optional checked metadata, never used to shortcut brackets.
class LieAlgebra {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vec>;

    LieAlgebra(std::vector<std::string> labels, const BracketTable& table,
               std::optional<std::vector<long>> grades = std::nullopt);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::optional<std::vector<long>>& grades() const { return grades_; }

    /// Coordinates of [e_i, e_j]; any i, j.
    const Vec& structure(std::size_t i, std::size_t j) const;

    Vec bracket(const Vec& x, const Vec& y) const;

    /// Express a vector as a labelled linear combination of basis elements.
    std::string describe(const Vec& v) const;

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Vec> table_;  // full antisymmetric completion, row-major
    std::optional<std::vector<long>> grades_;
};

ValidityReport check_jacobi(const LieAlgebra& g);
ValidityReport check_grading(const LieAlgebra& g);
bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

/// Antilinear map x -> T conj(x) in the fixed basis of g.
class AntilinearMap {
public:
    explicit AntilinearMap(Matrix t) : t_(std::move(t)) {}

    const Matrix& matrix() const { return t_; }
    std::size_t dim() const { return t_.rows(); }

    Vec apply(const Vec& x) const { return t_.apply(vec_conj(x)); }
    Subspace image(const Subspace& s) const;

private:
    Matrix t_;
};

struct InvolutionReport {
    ValidityReport report;
    std::size_t real_form_dim = 0;
};

/// Checks T conj(T) = id, the automorphism property on all basis pairs, and
/// reports the real dimension of the fixed-point set (must equal dim g).
InvolutionReport check_involution(const LieAlgebra& g, const AntilinearMap& t);

/// Real points of a complex subspace: realified basis of {x in s : t(x) = x},
/// as vectors in R^{2n} laid out (Re | Im). Helpers for the realification.
Vec realify(const Vec& x);
Vec unrealify(const Vec& xr);
Subspace realify_subspace(const Subspace& s);
Subspace real_points(const Subspace& s, const AntilinearMap& t);

}  // namespace crwb

#endif
