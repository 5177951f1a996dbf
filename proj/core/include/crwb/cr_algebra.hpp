#ifndef CRWB_CR_ALGEBRA_HPP
#define CRWB_CR_ALGEBRA_HPP

#include <string>
#include <vector>

#include "crwb/lie_algebra.hpp"
#include "crwb/su2_family.hpp"

namespace crwb {

class CRValidationError : public std::runtime_error {
public:
    CRValidationError(std::string what, std::vector<std::string> violations)
        : std::runtime_error(std::move(what)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

/// A complex Lie algebra g, an antilinear involutive automorphism tau and a
/// complex subalgebra f. Construction is a hard gate: invalid data throws.
class CRAlgebra {
public:
    static CRAlgebra validated(LieAlgebra g, AntilinearMap tau, Subspace f);

    const LieAlgebra& g() const { return g_; }
    const AntilinearMap& tau() const { return tau_; }
    const Subspace& f() const { return f_; }
    const Subspace& tau_f() const { return tau_f_; }
    /// f intersect tau(f), the complexified isotropy.
    const Subspace& isotropy() const { return isotropy_; }

private:
    CRAlgebra(LieAlgebra g, AntilinearMap tau, Subspace f, Subspace tau_f, Subspace isotropy)
        : g_(std::move(g)), tau_(std::move(tau)), f_(std::move(f)),
          tau_f_(std::move(tau_f)), isotropy_(std::move(isotropy)) {}

    LieAlgebra g_;
    AntilinearMap tau_;
    Subspace f_;
    Subspace tau_f_;
    Subspace isotropy_;
};

CRAlgebra to_cr_algebra(const FamilyInstance& fam);

struct CRDimensions {
    std::size_t cr_dim;
    std::size_t cr_codim;
};
CRDimensions cr_dimensions(const CRAlgebra& a);

enum class CRVerdict {
    kNondegenerate,            // stabilizes exactly at f intersect tau(f)
    kHolomorphicallyDegenerate,  // stabilizes strictly above it
    kTotallyComplex,           // cr_codim = 0
};
std::string verdict_name(CRVerdict v);

struct FreemanSequence {
    /// f = steps[0] >= steps[1] >= ...; the last two entries are equal
    /// (stabilization is witnessed by one extra identical step).
    std::vector<Subspace> steps;
    CRVerdict verdict;
    long order = -1;  // smallest h with steps[h] = isotropy, when nondegenerate
    std::size_t stabilization_index = 0;
};

/// One refinement step: {Z in s : [Z, tau(f)] contained in s + tau(f)}.
/// Requires isotropy <= s <= f.
Subspace freeman_step(const CRAlgebra& a, const Subspace& s);

FreemanSequence freeman_sequence(const CRAlgebra& a, std::size_t max_steps = 64);

/// True iff f + tau(stabilized Freeman term) = f.
bool weak_nondegeneracy(const CRAlgebra& a);

/// Levi form of the given order at the base point. Rows run over a complement
/// of the isotropy t in f^{order-1}, columns over the tau-images of a
/// complement of t in f (labelled with bars), and values live in the quotient
/// (f^{order-2} + tau f)/(f^{order-1} + tau f) — for order 1, g/(f + tau f).
struct LeviMatrix {
    std::size_t order;
    std::vector<Vec> row_basis;
    std::vector<std::string> row_labels;
    std::vector<Vec> col_basis;  // elements of f; the pairing brackets against tau(col)
    std::vector<std::string> col_labels;
    std::vector<Vec> target_basis;
    std::vector<std::string> target_labels;
    std::vector<Matrix> entries;  // one (rows x cols) matrix per target element
    Subspace isotropy;

    std::size_t rank() const;
    /// Coefficient vectors c with sum_i c_i entries[t](i,j) = 0 for all j, t.
    Subspace left_kernel_coords() const;
    /// Left kernel mapped back to g and extended by the isotropy.
    Subspace left_kernel_extended() const;
};
LeviMatrix levi_matrix(const CRAlgebra& a, std::size_t order);

/// The complex structure J on D = ((f + tau f) ∩ g^tau)/t^tau determined by
/// X + iJX in f. Basis vectors are tau-fixed representatives in g.
struct PartialComplexStructure {
    std::vector<Vec> basis;  // complex representatives of the real basis of D
    Matrix j;                // real entries, dim x dim
    Subspace isotropy_real;  // realified t^tau, for mod-t comparisons

    /// Applies J to a tau-fixed element of (f + tau f) ∩ g^tau.
    Vec apply(const Vec& x) const;
    /// Equality of classes modulo t^tau.
    bool same_class(const Vec& x, const Vec& y) const;
};
PartialComplexStructure partial_complex_structure(const CRAlgebra& a);

}  // namespace crwb

#endif
