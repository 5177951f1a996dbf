#include "crwb/su2_family.hpp"

#include <stdexcept>
#include <string>

namespace crwb {

namespace {

void require_valid_k(long k) {
    if (k < 1) throw std::invalid_argument("family requires k >= 1");
}

GaussianRational gr(long n) { return GaussianRational(n); }

}  // namespace

LieAlgebra build_sl2() {
    LieAlgebra::BracketTable table;
    // basis (X-, H, X+); [X-,H] = 2X-, [X-,X+] = -H, [H,X+] = 2X+
    Vec v0(3), v1(3), v2(3);
    v0[0] = gr(2);
    table[{0, 1}] = v0;
    v1[1] = gr(-1);
    table[{0, 2}] = v1;
    v2[2] = gr(2);
    table[{1, 2}] = v2;
    return LieAlgebra({"X-", "H", "X+"}, table, std::vector<long>{-1, 0, 1});
}

IrrepMatrices irrep_action(long k) {
    require_valid_k(k);
    std::size_t n = 2 * static_cast<std::size_t>(k) + 1;
    auto idx = [k](long m) { return static_cast<std::size_t>(m + k); };
    Matrix h(n, n), raise(n, n), lower(n, n);
    for (long m = -k; m <= k; ++m) {
        h.at(idx(m), idx(m)) = gr(2 * m);
        if (m < k) raise.at(idx(m + 1), idx(m)) = gr(k - m);
        if (m > -k) lower.at(idx(m - 1), idx(m)) = gr(k + m);
    }
    return {std::move(h), std::move(raise), std::move(lower)};
}

AntilinearMap build_tau(long k) {
    require_valid_k(k);
    using namespace family_layout;
    std::size_t n = dim(k);
    Matrix t(n, n);
    t.at(kXUp, kXDown) = gr(-1);  // tau(X-) = -X+
    t.at(kH, kH) = gr(-1);
    t.at(kXDown, kXUp) = gr(-1);  // tau(X+) = -X-
    for (long h = -k; h <= k; ++h)
        t.at(v(k, -h), v(k, h)) = gr((h % 2 == 0) ? 1 : -1);
    return AntilinearMap(std::move(t));
}

FamilyInstance build_family(long k) {
    require_valid_k(k);
    using namespace family_layout;
    std::size_t n = dim(k);

    std::vector<std::string> labels = {"X-", "H", "X+"};
    std::vector<long> grades = {-1, 0, 1};
    for (long h = -k; h <= k; ++h) {
        labels.push_back("v" + std::to_string(h));
        grades.push_back(h);
    }

    IrrepMatrices rho = irrep_action(k);
    auto vidx = [k](long m) { return static_cast<std::size_t>(m + k); };

    LieAlgebra::BracketTable table;
    {
        Vec c(n);
        c[kXDown] = gr(2);
        table[{kXDown, kH}] = c;  // [X-, H] = 2X-
    }
    {
        Vec c(n);
        c[kH] = gr(-1);
        table[{kXDown, kXUp}] = c;  // [X-, X+] = -H
    }
    {
        Vec c(n);
        c[kXUp] = gr(2);
        table[{kH, kXUp}] = c;  // [H, X+] = 2X+
    }
    // module action: [X, v_h] = rho(X) v_h
    for (long h = -k; h <= k; ++h) {
        std::size_t col = vidx(h);
        if (h > -k) {
            Vec c(n);
            c[v(k, h - 1)] = rho.lower.at(vidx(h - 1), col);
            table[{kXDown, v(k, h)}] = c;
        }
        if (h != 0) {
            Vec c(n);
            c[v(k, h)] = rho.h.at(col, col);
            table[{kH, v(k, h)}] = c;
        }
        if (h < k) {
            Vec c(n);
            c[v(k, h + 1)] = rho.raise.at(vidx(h + 1), col);
            table[{kXUp, v(k, h)}] = c;
        }
    }

    LieAlgebra g(std::move(labels), table, std::move(grades));

    std::vector<Vec> f_rows;
    f_rows.push_back(unit_vec(n, kH));
    f_rows.push_back(unit_vec(n, kXUp));
    for (long h = 1; h <= k; ++h) f_rows.push_back(unit_vec(n, v(k, h)));
    Subspace f = Subspace::span(n, f_rows);

    return FamilyInstance{k, std::move(g), build_tau(k), std::move(f)};
}

std::array<Vec, 3> pauli_basis() {
    GaussianRational half = GaussianRational::ratio(1, 2);
    GaussianRational ihalf = half * GaussianRational::i();
    Vec s1(3), s2(3), s3(3);
    s1[2] = half;
    s1[0] = -half;  // (X+ - X-)/2
    s2[2] = ihalf;
    s2[0] = ihalf;  // i(X+ + X-)/2
    s3[1] = ihalf;  // iH/2
    return {s1, s2, s3};
}

std::array<Vec, 3> pauli_basis_in_family(long k) {
    require_valid_k(k);
    std::size_t n = family_layout::dim(k);
    auto sl2 = pauli_basis();
    std::array<Vec, 3> out = {Vec(n), Vec(n), Vec(n)};
    for (int s = 0; s < 3; ++s)
        for (std::size_t j = 0; j < 3; ++j) out[s][j] = sl2[s][j];
    return out;
}

}  // namespace crwb
