#include <doctest.h>

#include "crwb/poly.hpp"

using namespace crwb;

namespace {
GaussianRational gr(long n) { return GaussianRational(n); }
const GaussianRational I = GaussianRational::i();
}  // namespace

TEST_CASE("variable table round trips bars") {
    VarSet vs{2};
    CHECK(vs.count() == 9);
    CHECK(vs.bar_of(VarSet::kT) == VarSet::kT);
    CHECK(vs.bar_of(VarSet::kW) == VarSet::kWbar);
    for (long h = 0; h <= 2; ++h) {
        CHECK(vs.bar_of(vs.z(h)) == vs.zbar(h));
        CHECK(vs.bar_of(vs.zbar(h)) == vs.z(h));
    }
    CHECK(vs.name(vs.z(1)) == "z1");
    CHECK(vs.name(vs.zbar(2)) == "zb2");
}

TEST_CASE("arithmetic keeps the canonical form") {
    long k = 1;
    VarSet vs{k};
    Poly p = Poly::variable(k, vs.z(0)) + Poly::variable(k, vs.z(1));
    Poly q = p - Poly::variable(k, vs.z(1));
    CHECK(q == Poly::variable(k, vs.z(0)));
    CHECK((p - p).is_zero());
    CHECK((p - p).term_count() == 0);
}

TEST_CASE("multiplication and degrees") {
    long k = 1;
    VarSet vs{k};
    Poly z0 = Poly::variable(k, vs.z(0));
    Poly z1 = Poly::variable(k, vs.z(1));
    Poly prod = (z0 + z1) * (z0 - z1);
    CHECK(prod == z0 * z0 - z1 * z1);
    CHECK(prod.total_degree() == 2);
    CHECK(Poly(k).total_degree() == -1);
}

TEST_CASE("derivative satisfies the product rule on a sample") {
    long k = 1;
    VarSet vs{k};
    Poly f = Poly::variable(k, vs.z(0), 2) * Poly::variable(k, VarSet::kW);
    Poly g = Poly::variable(k, vs.z(0)) + Poly::constant(k, gr(3));
    Poly lhs = (f * g).derivative(vs.z(0));
    Poly rhs = f.derivative(vs.z(0)) * g + f * g.derivative(vs.z(0));
    CHECK(lhs == rhs);
}

TEST_CASE("bar is an involution and conjugates coefficients") {
    long k = 2;
    VarSet vs{k};
    Poly p = Poly::variable(k, vs.z(0), 2).scaled(I) + Poly::variable(k, vs.zbar(1)).scaled(gr(3));
    CHECK(p.bar().bar() == p);
    Poly expected = Poly::variable(k, vs.zbar(0), 2).scaled(-I) + Poly::variable(k, vs.z(1)).scaled(gr(3));
    CHECK(p.bar() == expected);
}

TEST_CASE("substitution expands powers") {
    long k = 1;
    VarSet vs{k};
    Poly w = Poly::variable(k, VarSet::kW);
    Poly z0 = Poly::variable(k, vs.z(0));
    Poly p = w * w + w.scaled(gr(2));
    Poly sub = p.substitute(VarSet::kW, z0 + Poly::constant(k, gr(1)));
    Poly expected = (z0 + Poly::constant(k, gr(1))) * (z0 + Poly::constant(k, gr(1)))
                    + (z0 + Poly::constant(k, gr(1))).scaled(gr(2));
    CHECK(sub == expected);
}

TEST_CASE("evaluation agrees with substitution of constants") {
    long k = 1;
    VarSet vs{k};
    Poly p = Poly::variable(k, vs.z(0), 2).scaled(I) + Poly::variable(k, vs.z(1)).scaled(gr(-2));
    std::vector<GaussianRational> point(vs.count());
    point[vs.z(0)] = GaussianRational(Rational(1, 2));
    point[vs.z(1)] = I;
    GaussianRational expected = I * GaussianRational(Rational(1, 4)) + gr(-2) * I;
    CHECK(p.eval(point) == expected);
}

TEST_CASE("term order is graded lexicographic") {
    long k = 1;
    VarSet vs{k};
    // t < w in the variable order, degree dominates
    Poly p = Poly::variable(k, vs.z(0), 2) + Poly::variable(k, VarSet::kW) + Poly::constant(k, gr(1));
    std::vector<long> degrees;
    for (const auto& [m, c] : p.terms()) {
        long d = 0;
        for (auto e : m) d += e;
        degrees.push_back(d);
    }
    CHECK(degrees == std::vector<long>{0, 1, 2});
    CHECK(p.str() == "1 + w + z0^2");
}

TEST_CASE("mismatched variable sets are rejected") {
    Poly a(1), b(2);
    CHECK_THROWS_AS(a += b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}
