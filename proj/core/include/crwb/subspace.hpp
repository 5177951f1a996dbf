#ifndef CRWB_SUBSPACE_HPP
#define CRWB_SUBSPACE_HPP

#include <string>
#include <vector>

#include "crwb/linalg.hpp"

namespace crwb {

/// Linear subspace of Q(i)^n in canonical form: the basis is the set of
/// nonzero rows of the reduced row-echelon form of any spanning set, so
/// two subspaces are equal iff their bases are identical entry-wise.
class Subspace {
public:
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::vector<std::size_t> non_pivots() const;

    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;

    bool contains(const Vec& v) const;
    bool contains(const Subspace& o) const;

    /// Residual of v after eliminating all pivot coordinates.
    Vec reduce(const Vec& v) const;

    /// Coordinates of the class of v in the complement spanned by the
    /// non-pivot coordinates (deterministic representative of v mod this).
    Vec quotient_coords(const Vec& v) const;

    /// Basis rows of `larger` whose pivot is not a pivot of this subspace;
    /// requires this <= larger. Together with this subspace they span `larger`.
    std::vector<Vec> complement_in(const Subspace& larger) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t ambient, std::vector<Vec> basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_;
    std::vector<Vec> basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace crwb

#endif
