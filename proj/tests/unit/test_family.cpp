#include <doctest.h>

#include "crwb/cr_algebra.hpp"

using namespace crwb;
using namespace crwb::family_layout;

namespace {

GaussianRational gr(long n) { return GaussianRational(n); }
const GaussianRational I = GaussianRational::i();

// Independent oracle for the weight-basis action: represent v_m as the
// monomial z^{k+m} zbar^{k-m} and differentiate symbolically. A monomial is
// (a, b) for z^a zbar^b; the three operators act by
//   h:     z d/dz - zbar d/dzbar  ->  (a - b) (a, b)
//   raise: z d/dzbar              ->  b (a+1, b-1)
//   lower: zbar d/dz              ->  a (a-1, b+1)
struct MonomialAction {
    long coeff;
    long a, b;
};

MonomialAction act_h(long a, long b) { return {a - b, a, b}; }
MonomialAction act_raise(long a, long b) { return {b, a + 1, b - 1}; }
MonomialAction act_lower(long a, long b) { return {a, a - 1, b + 1}; }

Matrix oracle_matrix(long k, MonomialAction (*op)(long, long)) {
    std::size_t n = 2 * static_cast<std::size_t>(k) + 1;
    Matrix m(n, n);
    for (long h = -k; h <= k; ++h) {
        MonomialAction r = op(k + h, k - h);
        if (r.coeff == 0) continue;
        long target = (r.a - r.b) / 2;  // weight index of z^a zbar^b
        if (target < -k || target > k) continue;
        m.at(static_cast<std::size_t>(target + k), static_cast<std::size_t>(h + k)) = gr(r.coeff);
    }
    return m;
}

}  // namespace

TEST_CASE("irrep matrices agree with symbolic differentiation of monomials") {
    for (long k = 1; k <= 5; ++k) {
        IrrepMatrices rho = irrep_action(k);
        CHECK(rho.h == oracle_matrix(k, act_h));
        CHECK(rho.raise == oracle_matrix(k, act_raise));
        CHECK(rho.lower == oracle_matrix(k, act_lower));
    }
}

TEST_CASE("irrep matrices satisfy the representation relations") {
    for (long k = 1; k <= 6; ++k) {
        IrrepMatrices rho = irrep_action(k);
        CHECK(rho.raise * rho.lower - rho.lower * rho.raise == rho.h);
        Matrix two_raise = rho.raise + rho.raise;
        CHECK(rho.h * rho.raise - rho.raise * rho.h == two_raise);
    }
}

TEST_CASE("h acts with simple eigenvalues 2h") {
    for (long k = 1; k <= 6; ++k) {
        IrrepMatrices rho = irrep_action(k);
        std::size_t n = 2 * static_cast<std::size_t>(k) + 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) {
                    CHECK(rho.h.at(i, i) == gr(2 * (static_cast<long>(i) - k)));
                } else {
                    CHECK(rho.h.at(i, j).is_zero());
                }
            }
    }
}

TEST_CASE("spot values: k=1 weight action") {
    IrrepMatrices rho = irrep_action(1);
    // rho(H) = diag(-2, 0, 2)
    CHECK(rho.h.at(0, 0) == gr(-2));
    CHECK(rho.h.at(1, 1).is_zero());
    CHECK(rho.h.at(2, 2) == gr(2));
    // raise sends v_{-1} to 2 v_0: z d/dzbar (zbar^2) = 2 z zbar
    CHECK(rho.raise.at(1, 0) == gr(2));
    // top weight is annihilated
    CHECK(rho.raise.col(2) == Vec(3));
}

TEST_CASE("family rejects k < 1") {
    CHECK_THROWS_AS(build_family(0), std::invalid_argument);
    CHECK_THROWS_AS(build_family(-2), std::invalid_argument);
    CHECK_THROWS_AS(irrep_action(0), std::invalid_argument);
    CHECK_THROWS_AS(build_tau(0), std::invalid_argument);
}

TEST_CASE("family dimensions and structural gates") {
    for (long k = 1; k <= 5; ++k) {
        FamilyInstance fam = build_family(k);
        CHECK(fam.g.dim() == 2 * static_cast<std::size_t>(k) + 4);
        CHECK(fam.f.dim() == static_cast<std::size_t>(k) + 2);
        CHECK(check_jacobi(fam.g).ok());
        CHECK(check_grading(fam.g).ok());
        InvolutionReport inv = check_involution(fam.g, fam.tau);
        CHECK(inv.report.ok());
        CHECK(inv.real_form_dim == fam.g.dim());
        CHECK(is_subalgebra(fam.g, fam.f));
    }
}

TEST_CASE("module brackets: [X, v_h] = rho(X) v_h and [V, V] = 0") {
    FamilyInstance fam = build_family(2);
    std::size_t n = fam.g.dim();
    // [X+, v_0] = (k-0) v_1 = 2 v_1
    CHECK(fam.g.bracket(unit_vec(n, kXUp), unit_vec(n, v(2, 0))) ==
          vec_scale(gr(2), unit_vec(n, v(2, 1))));
    // the module is abelian
    CHECK(vec_is_zero(fam.g.bracket(unit_vec(n, v(2, 1)), unit_vec(n, v(2, 2)))));
}

TEST_CASE("k=1 hand-checked module bracket: [X+, v0] = v1") {
    // X+ = z d/dzbar applied to v0 = z zbar gives z^2 = v1
    FamilyInstance fam = build_family(1);
    std::size_t n = fam.g.dim();
    CHECK(fam.g.bracket(unit_vec(n, kXUp), unit_vec(n, v(1, 0))) == unit_vec(n, v(1, 1)));
}

TEST_CASE("grades follow the layout") {
    FamilyInstance fam = build_family(2);
    const auto& grades = *fam.g.grades();
    CHECK(grades[kXDown] == -1);
    CHECK(grades[kH] == 0);
    CHECK(grades[kXUp] == 1);
    CHECK(grades[v(2, 2)] == 2);
    CHECK(grades[v(2, -2)] == -2);
}

TEST_CASE("tau signs follow the alternating solution of the automorphism identity") {
    // epsilon_0 = 1 and epsilon_{h+1} = -epsilon_h, forced by
    // tau[X+, v_h] = [tau X+, tau v_h]; unique solution epsilon_h = (-1)^h.
    for (long k = 1; k <= 4; ++k) {
        AntilinearMap tau = build_tau(k);
        std::vector<long> eps(2 * static_cast<std::size_t>(k) + 1);
        eps[static_cast<std::size_t>(k)] = 1;
        for (long h = 0; h < k; ++h)
            eps[static_cast<std::size_t>(k + h + 1)] = -eps[static_cast<std::size_t>(k + h)];
        for (long h = 1; h <= k; ++h)
            eps[static_cast<std::size_t>(k - h)] = eps[static_cast<std::size_t>(k + h)];
        for (long h = -k; h <= k; ++h) {
            Vec img = tau.apply(unit_vec(family_layout::dim(k), v(k, h)));
            CHECK(img ==
                  vec_scale(gr(eps[static_cast<std::size_t>(h + k)]), unit_vec(family_layout::dim(k), v(k, -h))));
        }
    }
}

TEST_CASE("tau on the sl2 part and spot values") {
    FamilyInstance fam = build_family(2);
    std::size_t n = fam.g.dim();
    // tau(X+) = -X-, tau(iH) = iH, tau(v0) = v0, tau(v2) = v-2, tau(v1) = -v-1
    CHECK(fam.tau.apply(unit_vec(n, kXUp)) == vec_scale(gr(-1), unit_vec(n, kXDown)));
    CHECK(fam.tau.apply(vec_scale(I, unit_vec(n, kH))) == vec_scale(I, unit_vec(n, kH)));
    CHECK(fam.tau.apply(unit_vec(n, v(2, 0))) == unit_vec(n, v(2, 0)));
    CHECK(fam.tau.apply(unit_vec(n, v(2, 2))) == unit_vec(n, v(2, -2)));
    CHECK(fam.tau.apply(unit_vec(n, v(2, 1))) == vec_scale(gr(-1), unit_vec(n, v(2, -1))));
}

TEST_CASE("pauli basis satisfies the compact commutation relations") {
    LieAlgebra sl2 = build_sl2();
    auto s = pauli_basis();
    CHECK(sl2.bracket(s[0], s[1]) == s[2]);
    CHECK(sl2.bracket(s[2], s[0]) == s[1]);
    CHECK(sl2.bracket(s[2], s[1]) == vec_scale(gr(-1), s[0]));
}

TEST_CASE("pauli vectors are fixed by tau") {
    for (long k = 1; k <= 3; ++k) {
        FamilyInstance fam = build_family(k);
        for (const auto& sigma : pauli_basis_in_family(k)) CHECK(fam.tau.apply(sigma) == sigma);
    }
}

TEST_CASE("tau image of f and the lattice of f with tau f") {
    for (long k = 1; k <= 5; ++k) {
        FamilyInstance fam = build_family(k);
        std::size_t n = fam.g.dim();
        std::vector<Vec> rows = {unit_vec(n, kH), unit_vec(n, kXDown)};
        for (long h = 1; h <= k; ++h) rows.push_back(unit_vec(n, v(k, -h)));
        Subspace expected_tau_f = Subspace::span(n, rows);
        Subspace tau_f = fam.tau.image(fam.f);
        CHECK(tau_f == expected_tau_f);
        CHECK(fam.f.sum(tau_f).dim() == 2 * static_cast<std::size_t>(k) + 3);
        CHECK(fam.f.intersect(tau_f) == Subspace::span(n, {unit_vec(n, kH)}));
    }
}
