#include "crwb/cr_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace crwb {

CRAlgebra CRAlgebra::validated(LieAlgebra g, AntilinearMap tau, Subspace f) {
    std::vector<std::string> violations;
    if (f.ambient() != g.dim())
        violations.push_back("f has wrong ambient dimension");
    if (tau.dim() != g.dim() || tau.matrix().cols() != g.dim())
        violations.push_back("tau has wrong dimensions");
    if (violations.empty()) {
        InvolutionReport inv = check_involution(g, tau);
        for (const auto& v : inv.report.violations) violations.push_back(v);
        if (!is_subalgebra(g, f))
            violations.push_back("f is not a Lie subalgebra of g");
    }
    if (!violations.empty())
        throw CRValidationError("invalid CR algebra", std::move(violations));

    Subspace tau_f = tau.image(f);
    Subspace isotropy = f.intersect(tau_f);
    return CRAlgebra(std::move(g), std::move(tau), std::move(f),
                     std::move(tau_f), std::move(isotropy));
}

CRAlgebra to_cr_algebra(const FamilyInstance& fam) {
    return CRAlgebra::validated(fam.g, fam.tau, fam.f);
}

CRDimensions cr_dimensions(const CRAlgebra& a) {
    std::size_t crdim = a.f().dim() - a.isotropy().dim();
    std::size_t crcodim = a.g().dim() - a.f().sum(a.tau_f()).dim();
    return {crdim, crcodim};
}

std::string verdict_name(CRVerdict v) {
    switch (v) {
        case CRVerdict::kNondegenerate: return "NondegenerateOfOrder";
        case CRVerdict::kHolomorphicallyDegenerate: return "HolomorphicallyDegenerate";
        case CRVerdict::kTotallyComplex: return "TotallyComplex";
    }
    return "?";
}

Subspace freeman_step(const CRAlgebra& a, const Subspace& s) {
    if (!a.f().contains(s) || !s.contains(a.isotropy()))
        throw std::invalid_argument("freeman_step: argument must sit between the isotropy and f");

    Subspace mod = s.sum(a.tau_f());
    std::size_t m = s.dim();
    if (m == 0) return s;
    std::size_t ncoords = mod.non_pivots().size();
    std::size_t ngens = a.tau_f().dim();

    // Stacked linear map Z -> (quotient_coords([Z, W_j], s + tau f))_j on the
    // coefficient space of s.
    Matrix stacked(ngens * ncoords, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < ngens; ++j) {
            Vec q = mod.quotient_coords(a.g().bracket(s.basis()[i], a.tau_f().basis()[j]));
            for (std::size_t r = 0; r < ncoords; ++r) stacked.at(j * ncoords + r, i) = q[r];
        }
    }
    Subspace coeff_kernel = kernel(stacked);

    std::vector<Vec> rows;
    for (const auto& c : coeff_kernel.basis()) {
        Vec z(a.g().dim());
        for (std::size_t i = 0; i < m; ++i)
            if (!c[i].is_zero()) z = vec_add(z, vec_scale(c[i], s.basis()[i]));
        rows.push_back(std::move(z));
    }
    return Subspace::span(a.g().dim(), rows);
}

FreemanSequence freeman_sequence(const CRAlgebra& a, std::size_t max_steps) {
    if (max_steps < 1) throw std::invalid_argument("freeman_sequence: max_steps must be >= 1");
    FreemanSequence out;
    out.steps.push_back(a.f());
    bool stabilized = false;
    for (std::size_t n = 0; n < max_steps; ++n) {
        Subspace next = freeman_step(a, out.steps.back());
        if (!next.contains(a.isotropy()))
            throw std::logic_error("freeman_sequence: step lost the isotropy");
        bool fixed = (next == out.steps.back());
        out.steps.push_back(std::move(next));
        if (fixed) {
            out.stabilization_index = out.steps.size() - 2;
            stabilized = true;
            break;
        }
    }
    if (!stabilized)
        throw std::runtime_error("freeman_sequence: no stabilization within max_steps");

    const Subspace& stable = out.steps[out.stabilization_index];
    if (cr_dimensions(a).cr_codim == 0) {
        out.verdict = CRVerdict::kTotallyComplex;
    } else if (stable == a.isotropy()) {
        out.verdict = CRVerdict::kNondegenerate;
        for (std::size_t h = 0; h < out.steps.size(); ++h)
            if (out.steps[h] == a.isotropy()) {
                out.order = static_cast<long>(h);
                break;
            }
    } else {
        out.verdict = CRVerdict::kHolomorphicallyDegenerate;
    }
    return out;
}

bool weak_nondegeneracy(const CRAlgebra& a) {
    FreemanSequence seq = freeman_sequence(a);
    const Subspace& stable = seq.steps[seq.stabilization_index];
    Subspace f_prime = a.f().sum(a.tau().image(stable));
    return f_prime == a.f();
}

namespace {

// Coordinates of each rhs in the span of the columns of basis_cols; both are
// given in quotient coordinates. Throws if some rhs is outside the span.
std::vector<Vec> solve_in_span(const std::vector<Vec>& basis_cols, const std::vector<Vec>& rhs) {
    std::size_t nrows = basis_cols.empty() ? (rhs.empty() ? 0 : rhs[0].size()) : basis_cols[0].size();
    std::size_t t = basis_cols.size();
    Matrix aug(nrows, t + rhs.size());
    for (std::size_t c = 0; c < t; ++c)
        for (std::size_t r = 0; r < nrows; ++r) aug.at(r, c) = basis_cols[c][r];
    for (std::size_t c = 0; c < rhs.size(); ++c)
        for (std::size_t r = 0; r < nrows; ++r) aug.at(r, t + c) = rhs[c][r];

    RrefResult red = rref(aug);
    for (auto p : red.pivots)
        if (p >= t) throw std::domain_error("value outside the expected quotient space");

    std::vector<Vec> out(rhs.size(), Vec(t));
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
        for (std::size_t c = 0; c < rhs.size(); ++c) out[c][red.pivots[r]] = red.m.at(r, t + c);
    return out;
}

}  // namespace

LeviMatrix levi_matrix(const CRAlgebra& a, std::size_t order) {
    FreemanSequence seq = freeman_sequence(a);
    if (order < 1 || order > seq.stabilization_index + 1)
        throw std::invalid_argument("levi_matrix: order out of range");

    std::size_t h = order - 1;
    const Subspace& fh = seq.steps[h];
    const Subspace& t = a.isotropy();

    LeviMatrix lm{order, {}, {}, {}, {}, {}, {}, {}, t};
    lm.row_basis = t.complement_in(fh);
    for (const auto& v : lm.row_basis) lm.row_labels.push_back(a.g().describe(v));
    lm.col_basis = t.complement_in(a.f());
    for (const auto& v : lm.col_basis) lm.col_labels.push_back("bar(" + a.g().describe(v) + ")");

    Subspace s1 = fh.sum(a.tau_f());
    Subspace s0 = (h == 0) ? Subspace::full(a.g().dim()) : seq.steps[h - 1].sum(a.tau_f());
    lm.target_basis = s1.complement_in(s0);
    for (const auto& v : lm.target_basis)
        lm.target_labels.push_back("[" + a.g().describe(v) + "]");

    std::vector<Vec> target_coords;
    for (const auto& v : lm.target_basis) target_coords.push_back(s1.quotient_coords(v));

    std::vector<Vec> bracket_coords;
    for (const auto& z : lm.row_basis)
        for (const auto& w : lm.col_basis)
            bracket_coords.push_back(s1.quotient_coords(a.g().bracket(z, a.tau().apply(w))));

    std::vector<Vec> solved = solve_in_span(target_coords, bracket_coords);

    std::size_t nrows = lm.row_basis.size(), ncols = lm.col_basis.size();
    for (std::size_t tgt = 0; tgt < lm.target_basis.size(); ++tgt) {
        Matrix m(nrows, ncols);
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = solved[i * ncols + j][tgt];
        lm.entries.push_back(std::move(m));
    }
    return lm;
}

std::size_t LeviMatrix::rank() const {
    std::size_t nrows = row_basis.size(), ncols = col_basis.size();
    Matrix flat(nrows, ncols * entries.size());
    for (std::size_t t = 0; t < entries.size(); ++t)
        for (std::size_t i = 0; i < nrows; ++i)
            for (std::size_t j = 0; j < ncols; ++j) flat.at(i, t * ncols + j) = entries[t].at(i, j);
    return rref(flat).rank;
}

Subspace LeviMatrix::left_kernel_coords() const {
    std::size_t nrows = row_basis.size(), ncols = col_basis.size();
    Matrix sys(ncols * entries.size(), nrows);
    for (std::size_t t = 0; t < entries.size(); ++t)
        for (std::size_t j = 0; j < ncols; ++j)
            for (std::size_t i = 0; i < nrows; ++i) sys.at(t * ncols + j, i) = entries[t].at(i, j);
    return kernel(sys);
}

Subspace LeviMatrix::left_kernel_extended() const {
    Subspace coords = left_kernel_coords();
    std::vector<Vec> rows(isotropy.basis());
    for (const auto& c : coords.basis()) {
        Vec z(isotropy.ambient());
        for (std::size_t i = 0; i < row_basis.size(); ++i)
            if (!c[i].is_zero()) z = vec_add(z, vec_scale(c[i], row_basis[i]));
        rows.push_back(std::move(z));
    }
    return Subspace::span(isotropy.ambient(), rows);
}

PartialComplexStructure partial_complex_structure(const CRAlgebra& a) {
    Subspace ftf = a.f().sum(a.tau_f());
    Subspace dist_real = real_points(ftf, a.tau());
    Subspace t_real = real_points(a.isotropy(), a.tau());

    std::vector<Vec> d_rows_real = t_real.complement_in(dist_real);
    std::size_t m = d_rows_real.size();

    PartialComplexStructure pcs{{}, Matrix(m, m), t_real};
    for (const auto& r : d_rows_real) pcs.basis.push_back(unrealify(r));

    // For each basis X solve X + i * sum_j c_j D_j in f with real unknowns c.
    std::size_t qdim = a.f().non_pivots().size();
    std::vector<Vec> iq(m);  // quotient coords of i*D_j
    for (std::size_t j = 0; j < m; ++j)
        iq[j] = a.f().quotient_coords(vec_scale(GaussianRational::i(), pcs.basis[j]));

    Matrix sys(2 * qdim, m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < qdim; ++r) {
            sys.at(r, j) = GaussianRational(iq[j][r].re());
            sys.at(qdim + r, j) = GaussianRational(iq[j][r].im());
        }

    for (std::size_t col = 0; col < m; ++col) {
        Vec q = a.f().quotient_coords(pcs.basis[col]);
        Matrix aug(2 * qdim, m + 1);
        for (std::size_t r = 0; r < 2 * qdim; ++r)
            for (std::size_t j = 0; j < m; ++j) aug.at(r, j) = sys.at(r, j);
        for (std::size_t r = 0; r < qdim; ++r) {
            aug.at(r, m) = GaussianRational(-q[r].re());
            aug.at(qdim + r, m) = GaussianRational(-q[r].im());
        }
        RrefResult red = rref(aug);
        for (auto p : red.pivots)
            if (p == m) throw std::domain_error("partial complex structure: no solution");
        if (red.rank != m)
            throw std::domain_error("partial complex structure: solution not unique");
        for (std::size_t r = 0; r < red.pivots.size(); ++r)
            pcs.j.at(red.pivots[r], col) = red.m.at(r, m);
    }

    // J^2 = -id follows from existence and uniqueness; verify anyway.
    Matrix minus_id(m, m);
    for (std::size_t i = 0; i < m; ++i) minus_id.at(i, i) = GaussianRational(-1);
    if (!(pcs.j * pcs.j == minus_id))
        throw std::logic_error("partial complex structure: J^2 != -id");
    return pcs;
}

Vec PartialComplexStructure::apply(const Vec& x) const {
    std::size_t m = basis.size();
    Vec xr = realify(x);
    std::size_t nr = xr.size();

    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(realify(b));
    for (const auto& t : isotropy_real.basis()) cols.push_back(t);

    Matrix aug(nr, cols.size() + 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < nr; ++r) aug.at(r, c) = cols[c][r];
    for (std::size_t r = 0; r < nr; ++r) aug.at(r, cols.size()) = xr[r];
    RrefResult red = rref(aug);
    for (auto p : red.pivots)
        if (p == cols.size())
            throw std::invalid_argument("apply: element is not in the distribution");
    Vec coeff(cols.size());
    for (std::size_t r = 0; r < red.pivots.size(); ++r)
        coeff[red.pivots[r]] = red.m.at(r, cols.size());

    Vec out(x.size());
    for (std::size_t i = 0; i < m; ++i) {
        GaussianRational ci;
        for (std::size_t l = 0; l < m; ++l) {
            if (j.at(i, l).is_zero() || coeff[l].is_zero()) continue;
            ci += j.at(i, l) * coeff[l];
        }
        if (!ci.is_zero()) out = vec_add(out, vec_scale(ci, basis[i]));
    }
    return out;
}

bool PartialComplexStructure::same_class(const Vec& x, const Vec& y) const {
    return isotropy_real.contains(realify(vec_sub(x, y)));
}

}  // namespace crwb
