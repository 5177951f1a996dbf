#ifndef CRWB_SU2_FAMILY_HPP
#define CRWB_SU2_FAMILY_HPP

#include <array>

#include "crwb/lie_algebra.hpp"

namespace crwb {

/// Basis layout shared by the whole family: (X-, H, X+, v_{-k}, ..., v_k)
/// with grades (-1, 0, 1, -k, ..., k). X- lowers, X+ raises.
namespace family_layout {
inline constexpr std::size_t kXDown = 0;
inline constexpr std::size_t kH = 1;
inline constexpr std::size_t kXUp = 2;
inline std::size_t v(long k, long h) { return 3 + static_cast<std::size_t>(h + k); }
inline std::size_t dim(long k) { return 2 * static_cast<std::size_t>(k) + 4; }
}  // namespace family_layout

/// sl2 with relations [H,X-] = -2X-, [H,X+] = 2X+, [X+,X-] = H and
/// grades (-1, 0, 1) on (X-, H, X+).
LieAlgebra build_sl2();

/// Weight-basis action matrices on V = span(v_{-k}, ..., v_k):
/// h v_m = 2m v_m, raise v_m = (k-m) v_{m+1}, lower v_m = (k+m) v_{m-1}.
struct IrrepMatrices {
    Matrix h;
    Matrix raise;
    Matrix lower;
};
IrrepMatrices irrep_action(long k);

/// The graded semidirect product g = sl2 + V together with the antilinear
/// involution and the CR subalgebra f = span(H, X+, v_1, ..., v_k).
struct FamilyInstance {
    long k;
    LieAlgebra g;
    AntilinearMap tau;
    Subspace f;
};

/// Antilinear involution with tau(H) = -H, tau(X+) = -X-, tau(X-) = -X+ and
/// tau(v_h) = (-1)^h v_{-h}; the fixed set is the compact real form.
AntilinearMap build_tau(long k);

FamilyInstance build_family(long k);

/// sigma_1 = (X+ - X-)/2, sigma_2 = i(X+ + X-)/2, sigma_3 = iH/2, as
/// coordinate vectors in the 3-dimensional sl2 basis (X-, H, X+).
std::array<Vec, 3> pauli_basis();

/// The same three vectors embedded into the (2k+4)-dimensional family basis.
std::array<Vec, 3> pauli_basis_in_family(long k);

}  // namespace crwb

#endif
