#include <doctest.h>

#include <random>

#include "crwb/su2_family.hpp"

using namespace crwb;

namespace {

GaussianRational gr(long n) { return GaussianRational(n); }

Vec random_vec(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<long> val(-3, 3);
    Vec v(n);
    for (auto& x : v) x = GaussianRational(Rational(val(rng)), Rational(val(rng)));
    return v;
}

}  // namespace

TEST_CASE("sl2 bracket relations") {
    LieAlgebra sl2 = build_sl2();
    Vec xdn = unit_vec(3, 0), h = unit_vec(3, 1), xup = unit_vec(3, 2);
    CHECK(sl2.bracket(h, xup) == vec_scale(gr(2), xup));
    CHECK(sl2.bracket(h, xdn) == vec_scale(gr(-2), xdn));
    CHECK(sl2.bracket(xup, xdn) == h);
    CHECK(vec_is_zero(sl2.bracket(h, h)));
}

TEST_CASE("bracket requires matching dimensions") {
    LieAlgebra sl2 = build_sl2();
    CHECK_THROWS_AS(sl2.bracket(Vec(2), Vec(3)), std::invalid_argument);
}

TEST_CASE("bracket is bilinear and antisymmetric on random vectors") {
    LieAlgebra g = build_family(2).g;
    std::mt19937 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        Vec x = random_vec(rng, g.dim()), y = random_vec(rng, g.dim()), z = random_vec(rng, g.dim());
        GaussianRational a(Rational(2, 3)), b(Rational(-1, 2), Rational(1));
        Vec lhs = g.bracket(vec_add(vec_scale(a, x), vec_scale(b, y)), z);
        Vec rhs = vec_add(vec_scale(a, g.bracket(x, z)), vec_scale(b, g.bracket(y, z)));
        CHECK(lhs == rhs);
        CHECK(g.bracket(x, y) == vec_scale(gr(-1), g.bracket(y, x)));
        CHECK(vec_is_zero(g.bracket(x, x)));
    }
}

TEST_CASE("Jacobi check accepts sl2 and abelian algebras") {
    CHECK(check_jacobi(build_sl2()).ok());
    LieAlgebra abelian({"a", "b", "c"}, {});
    CHECK(check_jacobi(abelian).ok());
}

TEST_CASE("Jacobi check pinpoints a tampered table") {
    // scale [X-,H] by 2: the triple (X-, H, X+) no longer closes
    LieAlgebra::BracketTable table;
    Vec v0(3), v1(3), v2(3);
    v0[0] = gr(4);
    table[{0, 1}] = v0;
    v1[1] = gr(-1);
    table[{0, 2}] = v1;
    v2[2] = gr(2);
    table[{1, 2}] = v2;
    LieAlgebra bad({"X-", "H", "X+"}, table);
    ValidityReport rep = check_jacobi(bad);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations[0].find("X-") != std::string::npos);
}

TEST_CASE("subalgebra checks in sl2") {
    LieAlgebra sl2 = build_sl2();
    Subspace borel = Subspace::span(3, {unit_vec(3, 1), unit_vec(3, 2)});
    CHECK(is_subalgebra(sl2, borel));
    Subspace updown = Subspace::span(3, {unit_vec(3, 0), unit_vec(3, 2)});
    CHECK_FALSE(is_subalgebra(sl2, updown));  // [X+,X-] = H escapes
    CHECK(is_subalgebra(sl2, Subspace::zero(3)));
}

TEST_CASE("grading check accepts the family and flags a bad grade map") {
    FamilyInstance fam = build_family(2);
    CHECK(check_grading(fam.g).ok());

    LieAlgebra::BracketTable table;
    Vec c01(3);
    c01[2] = gr(1);  // [a, b] = c but grade(c) != grade(a) + grade(b)
    table[{0, 1}] = c01;
    LieAlgebra bad({"a", "b", "c"}, table, std::vector<long>{1, 1, 3});
    CHECK_FALSE(check_grading(bad).ok());
}

TEST_CASE("grading holds coordinatewise for every constructed family") {
    for (long k = 1; k <= 4; ++k) {
        LieAlgebra g = build_family(k).g;
        const auto& grades = *g.grades();
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = i + 1; j < g.dim(); ++j) {
                const Vec& c = g.structure(i, j);
                for (std::size_t m = 0; m < g.dim(); ++m)
                    if (!c[m].is_zero()) CHECK(grades[m] == grades[i] + grades[j]);
            }
    }
}

TEST_CASE("antilinear apply and involution on the family") {
    FamilyInstance fam = build_family(1);
    InvolutionReport rep = check_involution(fam.g, fam.tau);
    CHECK(rep.report.ok());
    CHECK(rep.real_form_dim == fam.g.dim());

    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Vec x = random_vec(rng, fam.g.dim());
        CHECK(fam.tau.apply(fam.tau.apply(x)) == x);
    }
}

TEST_CASE("involution check rejects a non-involutive map") {
    LieAlgebra abelian({"a", "b"}, {});
    Matrix t = Matrix::identity(2);
    t.at(0, 0) = gr(2);
    InvolutionReport rep = check_involution(abelian, AntilinearMap(t));
    CHECK_FALSE(rep.report.ok());
}

TEST_CASE("involution check rejects a non-automorphism") {
    // in sl2, x -> conj(x) swaps nothing but breaks tau[x,y] = [tau x, tau y]
    // only if brackets disagree; scaling one basis direction does break it
    LieAlgebra sl2 = build_sl2();
    Matrix t = Matrix::identity(3);
    t.at(2, 2) = gr(-1);
    InvolutionReport rep = check_involution(sl2, AntilinearMap(t));
    CHECK_FALSE(rep.report.ok());
}

TEST_CASE("real points of the full space have real dimension dim g") {
    for (long k = 1; k <= 3; ++k) {
        FamilyInstance fam = build_family(k);
        Subspace fixed = real_points(Subspace::full(fam.g.dim()), fam.tau);
        CHECK(fixed.dim() == fam.g.dim());
    }
}

TEST_CASE("realify and unrealify are inverse") {
    std::mt19937 rng(17);
    Vec x = random_vec(rng, 5);
    CHECK(unrealify(realify(x)) == x);
}
