#include <doctest.h>

#include "crwb/cr_algebra.hpp"

using namespace crwb;
using namespace crwb::family_layout;

namespace {

GaussianRational gr(long n) { return GaussianRational(n); }

// the totally complex control case: su(2) acting on CP^1, f = borel
CRAlgebra su2_borel() {
    LieAlgebra sl2 = build_sl2();
    Matrix t(3, 3);
    t.at(2, 0) = gr(-1);
    t.at(1, 1) = gr(-1);
    t.at(0, 2) = gr(-1);
    Subspace borel = Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)});
    return CRAlgebra::validated(sl2, AntilinearMap(t), borel);
}

// two-dimensional abelian algebra with the swap conjugation
CRAlgebra abelian_swap(const Subspace& f) {
    LieAlgebra g({"a", "b"}, {});
    Matrix t(2, 2);
    t.at(0, 1) = gr(1);
    t.at(1, 0) = gr(1);
    return CRAlgebra::validated(g, AntilinearMap(t), f);
}

// two-dimensional abelian algebra with entrywise conjugation; f = <e1> is
// totally real
CRAlgebra abelian_real_line() {
    LieAlgebra g({"a", "b"}, {});
    return CRAlgebra::validated(g, AntilinearMap(Matrix::identity(2)),
                                Subspace::span(2, {unit_vec(2, 0)}));
}

Subspace family_step_oracle(const FamilyInstance& fam, long h) {
    // closed form: f^h = span{H, v_{h+1}, ..., v_k}
    std::size_t n = fam.g.dim();
    std::vector<Vec> rows = {unit_vec(n, kH)};
    for (long m = h + 1; m <= fam.k; ++m) rows.push_back(unit_vec(n, v(fam.k, m)));
    return Subspace::span(n, rows);
}

}  // namespace

TEST_CASE("validated construction rejects broken input") {
    LieAlgebra sl2 = build_sl2();
    // f not a subalgebra: span{X-, X+}
    Subspace bad_f = Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 2)});
    Matrix t(3, 3);
    t.at(2, 0) = gr(-1);
    t.at(1, 1) = gr(-1);
    t.at(0, 2) = gr(-1);
    CHECK_THROWS_AS(CRAlgebra::validated(sl2, AntilinearMap(t), bad_f), CRValidationError);
    // tau not an involution
    Matrix bad_t = Matrix::identity(3);
    bad_t.at(0, 0) = gr(2);
    Subspace borel = Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)});
    CHECK_THROWS_AS(CRAlgebra::validated(sl2, AntilinearMap(bad_t), borel), CRValidationError);
}

TEST_CASE("CR dimensions of the family") {
    for (long k = 1; k <= 8; ++k) {
        CRAlgebra a = to_cr_algebra(build_family(k));
        CRDimensions d = cr_dimensions(a);
        CHECK(d.cr_dim == static_cast<std::size_t>(k) + 1);
        CHECK(d.cr_codim == 1);
        // dim(f + tau f) = 2 crdim + dim(f ∩ tau f): tau preserves dimensions
        CHECK(a.f().sum(a.tau_f()).dim() == 2 * d.cr_dim + a.isotropy().dim());
    }
}

TEST_CASE("CR dimensions of the control case") {
    CRDimensions d = cr_dimensions(su2_borel());
    CHECK(d.cr_dim == 1);
    CHECK(d.cr_codim == 0);
}

TEST_CASE("CR dimensions of a totally real line") {
    CRAlgebra a = abelian_real_line();
    CRDimensions d = cr_dimensions(a);
    CHECK(d.cr_dim == 0);
    CHECK(d.cr_codim == 1);  // dim g - dim f
}

TEST_CASE("freeman_step on the family") {
    CRAlgebra a2 = to_cr_algebra(build_family(2));
    CHECK(freeman_step(a2, a2.f()) == family_step_oracle(build_family(2), 1));
    CHECK(freeman_step(a2, a2.isotropy()) == a2.isotropy());

    CRAlgebra a1 = to_cr_algebra(build_family(1));
    std::size_t n1 = a1.g().dim();
    CHECK(freeman_step(a1, a1.f()) == Subspace::span(n1, {unit_vec(n1, kH)}));
}

TEST_CASE("freeman_step rejects arguments outside [isotropy, f]") {
    CRAlgebra a = to_cr_algebra(build_family(2));
    CHECK_THROWS_AS(freeman_step(a, Subspace::full(a.g().dim())), std::invalid_argument);
    CHECK_THROWS_AS(freeman_step(a, Subspace::zero(a.g().dim())), std::invalid_argument);
}

TEST_CASE("freeman sequence of the family matches the closed form") {
    for (long k = 1; k <= 6; ++k) {
        FamilyInstance fam = build_family(k);
        CRAlgebra a = to_cr_algebra(fam);
        FreemanSequence seq = freeman_sequence(a);
        CHECK(seq.verdict == CRVerdict::kNondegenerate);
        CHECK(seq.order == k);
        CHECK(seq.stabilization_index == static_cast<std::size_t>(k));
        REQUIRE(seq.steps.size() == static_cast<std::size_t>(k) + 2);
        CHECK(seq.steps[0] == fam.f);
        for (long h = 1; h <= k; ++h)
            CHECK(seq.steps[static_cast<std::size_t>(h)] == family_step_oracle(fam, h));
        CHECK(seq.steps.back() == seq.steps[seq.stabilization_index]);
        // dims strictly decrease before stabilization
        for (std::size_t i = 0; i + 1 <= seq.stabilization_index; ++i)
            CHECK(seq.steps[i].dim() > seq.steps[i + 1].dim());
        // every step is a subalgebra containing the isotropy
        for (const auto& s : seq.steps) {
            CHECK(is_subalgebra(a.g(), s));
            CHECK(s.contains(a.isotropy()));
        }
    }
}

TEST_CASE("freeman sequence dims for k=3 read 5,3,2,1") {
    CRAlgebra a = to_cr_algebra(build_family(3));
    FreemanSequence seq = freeman_sequence(a);
    std::vector<std::size_t> dims;
    for (const auto& s : seq.steps) dims.push_back(s.dim());
    CHECK(dims == std::vector<std::size_t>{5, 3, 2, 1, 1});
}

TEST_CASE("control case stabilizes immediately as totally complex") {
    FreemanSequence seq = freeman_sequence(su2_borel());
    CHECK(seq.verdict == CRVerdict::kTotallyComplex);
    CHECK(seq.stabilization_index == 0);
    CHECK(seq.steps[0] == seq.steps[1]);
    // brute force: f + tau f is all of g, so the first step keeps f
    CHECK(su2_borel().f().sum(su2_borel().tau_f()) == Subspace::full(3));
}

TEST_CASE("f = g is totally complex") {
    LieAlgebra sl2 = build_sl2();
    Matrix t(3, 3);
    t.at(2, 0) = gr(-1);
    t.at(1, 1) = gr(-1);
    t.at(0, 2) = gr(-1);
    CRAlgebra a = CRAlgebra::validated(sl2, AntilinearMap(t), Subspace::full(3));
    FreemanSequence seq = freeman_sequence(a);
    CHECK(seq.verdict == CRVerdict::kTotallyComplex);
    CHECK(seq.stabilization_index == 0);
}

TEST_CASE("a tau-stable complement with positive codimension is holomorphically degenerate") {
    // abelian C^3, tau swaps e1 and e2 and fixes e3, f = <e1>: every bracket
    // vanishes, so the sequence stabilizes at f, strictly above f ∩ tau f = 0,
    // while cr_codim = 3 - 2 = 1
    LieAlgebra g({"a", "b", "c"}, {});
    Matrix t(3, 3);
    t.at(0, 1) = gr(1);
    t.at(1, 0) = gr(1);
    t.at(2, 2) = gr(1);
    CRAlgebra a = CRAlgebra::validated(g, AntilinearMap(t), Subspace::span(3, {unit_vec(3, 0)}));
    CHECK(cr_dimensions(a).cr_codim == 1);
    FreemanSequence seq = freeman_sequence(a);
    CHECK(seq.verdict == CRVerdict::kHolomorphicallyDegenerate);
    CHECK(seq.steps[seq.stabilization_index] == a.f());
    CHECK_FALSE(weak_nondegeneracy(a));
}

TEST_CASE("non-stabilization within max_steps raises") {
    CRAlgebra a = to_cr_algebra(build_family(3));
    CHECK_THROWS_AS(freeman_sequence(a, 1), std::runtime_error);
}

TEST_CASE("weak nondegeneracy") {
    for (long k = 1; k <= 8; ++k) CHECK(weak_nondegeneracy(to_cr_algebra(build_family(k))));
    // a tau-stable complement direction breaks it: stabilized term is f and
    // tau(f) is a different line
    CHECK_FALSE(weak_nondegeneracy(abelian_swap(Subspace::span(2, {unit_vec(2, 0)}))));
    CHECK(weak_nondegeneracy(abelian_real_line()));
}

TEST_CASE("order-1 Levi matrix of the family") {
    for (long k = 1; k <= 6; ++k) {
        CRAlgebra a = to_cr_algebra(build_family(k));
        LeviMatrix lm = levi_matrix(a, 1);
        REQUIRE(lm.row_basis.size() == static_cast<std::size_t>(k) + 1);
        REQUIRE(lm.col_basis.size() == static_cast<std::size_t>(k) + 1);
        REQUIRE(lm.entries.size() == 1);  // g/(f + tau f) is a line
        CHECK(lm.row_labels[0] == "X+");
        CHECK(lm.row_labels[1] == "v1");
        CHECK(lm.col_labels[0] == "bar(X+)");
        // support: exactly (X+, bar(v1)) and (v1, bar(X+)), values -(k+1), k+1
        const Matrix& m = lm.entries[0];
        for (std::size_t i = 0; i < lm.row_basis.size(); ++i)
            for (std::size_t j = 0; j < lm.col_basis.size(); ++j) {
                if (i == 0 && j == 1) {
                    CHECK(m.at(i, j) == gr(-(k + 1)));
                } else if (i == 1 && j == 0) {
                    CHECK(m.at(i, j) == gr(k + 1));
                } else {
                    CHECK(m.at(i, j).is_zero());
                }
            }
        CHECK(lm.rank() == 2);
    }
}

TEST_CASE("order-2 Levi matrix for k=2 pairs v2 against bar(X+)") {
    CRAlgebra a = to_cr_algebra(build_family(2));
    LeviMatrix lm = levi_matrix(a, 2);
    REQUIRE(lm.row_labels == std::vector<std::string>{"v2"});
    // target quotient (f^0 + tau f)/(f^1 + tau f) has the classes of X+ and v1
    REQUIRE(lm.target_labels == std::vector<std::string>{"[X+]", "[v1]"});
    // [v2, tau(X+)] = [v2, -X-] = (k+2) v1 = 4 v1
    CHECK(lm.entries[1].at(0, 0) == gr(4));
    CHECK(lm.entries[1].at(0, 1).is_zero());
    CHECK(lm.entries[0].at(0, 0).is_zero());
    CHECK(lm.rank() == 1);
}

TEST_CASE("isotropy directions pair to zero") {
    CRAlgebra a = to_cr_algebra(build_family(2));
    Subspace s1 = a.f().sum(a.tau_f());
    const Vec h = unit_vec(a.g().dim(), kH);
    for (const auto& w : a.tau_f().basis())
        CHECK(s1.contains(a.g().bracket(h, w)));
}

TEST_CASE("left kernels of the Levi forms reproduce the Freeman sequence") {
    for (long k = 1; k <= 6; ++k) {
        CRAlgebra a = to_cr_algebra(build_family(k));
        FreemanSequence seq = freeman_sequence(a);
        for (std::size_t order = 1; order <= seq.stabilization_index + 1; ++order) {
            LeviMatrix lm = levi_matrix(a, order);
            CHECK(lm.left_kernel_extended() == seq.steps[order]);
        }
    }
}

TEST_CASE("levi order range guard") {
    CRAlgebra a = to_cr_algebra(build_family(2));
    CHECK_THROWS_AS(levi_matrix(a, 0), std::invalid_argument);
    CHECK_THROWS_AS(levi_matrix(a, 4), std::invalid_argument);  // stabilization index is 2
    CHECK_NOTHROW(levi_matrix(a, 3));                           // empty row basis, still defined
    CHECK(levi_matrix(a, 3).row_basis.empty());
    CHECK(levi_matrix(a, 3).left_kernel_extended() == a.isotropy());
}

TEST_CASE("partial complex structure of the family") {
    for (long k = 1; k <= 6; ++k) {
        FamilyInstance fam = build_family(k);
        CRAlgebra a = to_cr_algebra(fam);
        PartialComplexStructure pcs = partial_complex_structure(a);
        std::size_t m = pcs.basis.size();
        CHECK(m == 2 * static_cast<std::size_t>(k + 1));

        Matrix minus_id(m, m);
        for (std::size_t i = 0; i < m; ++i) minus_id.at(i, i) = gr(-1);
        CHECK(pcs.j * pcs.j == minus_id);

        for (const auto& x : pcs.basis) {
            Vec jx = pcs.apply(x);
            CHECK(a.f().contains(vec_add(x, vec_scale(GaussianRational::i(), jx))));
        }
    }
}

TEST_CASE("partial complex structure sends sigma1 into the sigma2 line") {
    FamilyInstance fam = build_family(2);
    CRAlgebra a = to_cr_algebra(fam);
    PartialComplexStructure pcs = partial_complex_structure(a);
    auto sigma = pauli_basis_in_family(2);
    Vec j_sigma1 = pcs.apply(sigma[0]);
    // J(sigma1) = -sigma2: sigma1 - i sigma2 = X+ lies in f
    CHECK(pcs.same_class(j_sigma1, vec_scale(gr(-1), sigma[1])));
}

TEST_CASE("partial complex structure acts on weight lines through sigma3") {
    // On the tau-fixed line through x_h = v_h + tau(v_h) the structure acts as
    // (1/h') rho(sigma3) where h' is the weight index with X + iJX in f; the
    // line carries both labels h and -h, and the subalgebra f selects h' = -h
    // for h > 0.
    for (long k = 1; k <= 4; ++k) {
        FamilyInstance fam = build_family(k);
        CRAlgebra a = to_cr_algebra(fam);
        PartialComplexStructure pcs = partial_complex_structure(a);
        std::size_t n = fam.g.dim();
        auto sigma = pauli_basis_in_family(k);
        for (long h = 1; h <= k; ++h) {
            Vec xh = vec_add(unit_vec(n, v(k, h)),
                             vec_scale(gr(h % 2 == 0 ? 1 : -1), unit_vec(n, v(k, -h))));
            Vec rho_sigma3 = fam.g.bracket(sigma[2], xh);
            Vec expected = vec_scale(GaussianRational::ratio(1, -h), rho_sigma3);
            CHECK(pcs.same_class(pcs.apply(xh), expected));
        }
    }
}

TEST_CASE("partial complex structure is trivial on a totally real algebra") {
    PartialComplexStructure pcs = partial_complex_structure(abelian_real_line());
    CHECK(pcs.basis.empty());
}
