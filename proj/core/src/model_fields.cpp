#include "crwb/model_fields.hpp"

#include <stdexcept>

namespace crwb {

namespace {

Poly z0pow(long k, long h) {
    return Poly::variable(k, VarSet{k}.z(0), static_cast<unsigned>(h));
}

Poly zvar(long k, long h) { return Poly::variable(k, VarSet{k}.z(h)); }

Poly wvar(long k) { return Poly::variable(k, VarSet::kW); }

Poly cst(long k, GaussianRational c) { return Poly::constant(k, std::move(c)); }

}  // namespace

ModelFields model_fields(long k) {
    if (k < 1) throw std::invalid_argument("model requires k >= 1");
    const GaussianRational one(1), half = GaussianRational::ratio(1, 2);
    const GaussianRational im = GaussianRational::i();

    ModelFields mf{k, {}, HoloField(k), HoloField(k), HoloField(k), HoloField(k),
                   HoloField(k), HoloField(k), HoloField(k), HoloField(k)};

    for (long h = 1; h <= k; ++h) {
        HoloField zf(k);  // Z_h = 1/2 dz_h + z0^h dw
        zf.z(h) = cst(k, half);
        zf.w() = z0pow(k, h);
        mf.abelian.emplace("Z" + std::to_string(h), zf);

        HoloField zfp(k);  // Z'_h = i(1/2 dz_h - z0^h dw)
        zfp.z(h) = cst(k, half * im);
        zfp.w() = z0pow(k, h).scaled(-im);
        mf.abelian.emplace("Z'" + std::to_string(h), zfp);

        HoloField ah(k);  // A'_h = i z0^h dz_h
        ah.z(h) = z0pow(k, h).scaled(im);
        mf.abelian.emplace("A'" + std::to_string(h), ah);
    }
    {
        HoloField wf(k);  // W = i dw
        wf.w() = cst(k, im);
        mf.abelian.emplace("W", wf);
    }
    for (long h = 1; h <= k; ++h)
        for (long j = h + 1; j <= k; ++j) {
            HoloField a(k);  // A_{h,j} = 1/2 (z0^h dz_j - z0^j dz_h)
            a.z(j) = z0pow(k, h).scaled(half);
            a.z(h) = z0pow(k, j).scaled(-half);
            mf.abelian.emplace("A" + std::to_string(h) + "," + std::to_string(j), a);

            HoloField ap(k);  // A'_{h,j} = -(i/2)(z0^h dz_j + z0^j dz_h)
            ap.z(j) = z0pow(k, h).scaled(-half * im);
            ap.z(h) = z0pow(k, j).scaled(-half * im);
            mf.abelian.emplace("A'" + std::to_string(h) + "," + std::to_string(j), ap);
        }

    // E = (k+1) w dw + z0 dz0 + sum (k+1-h) z_h dz_h
    mf.euler.w() = wvar(k).scaled(GaussianRational(k + 1));
    mf.euler.z(0) = zvar(k, 0);
    for (long h = 1; h <= k; ++h) mf.euler.z(h) = zvar(k, h).scaled(GaussianRational(k + 1 - h));

    // J = -i (z0 dz0 + sum h z_h dz_h)
    mf.rot.z(0) = zvar(k, 0).scaled(-im);
    for (long h = 1; h <= k; ++h) mf.rot.z(h) = zvar(k, h).scaled(GaussianRational(-h) * im);

    // K = -z0 dz0 + sum h z_h dz_h
    mf.weight.z(0) = zvar(k, 0).scaled(-one);
    for (long h = 1; h <= k; ++h) mf.weight.z(h) = zvar(k, h).scaled(GaussianRational(h));

    // Z- = k (dz0 + 2 z1 dw - sum_{h=1..k-1} (h+1) z_{h+1} dz_h)
    mf.descend.z(0) = cst(k, GaussianRational(k));
    mf.descend.w() = zvar(k, 1).scaled(GaussianRational(2 * k));
    for (long h = 1; h <= k - 1; ++h)
        mf.descend.z(h) = zvar(k, h + 1).scaled(GaussianRational(-k * (h + 1)));

    // Z'- = i k (dz0 - 2 z1 dw + sum (h+1) z_{h+1} dz_h)
    mf.descend_rot.z(0) = cst(k, GaussianRational(k) * im);
    mf.descend_rot.w() = zvar(k, 1).scaled(GaussianRational(-2 * k) * im);
    for (long h = 1; h <= k - 1; ++h)
        mf.descend_rot.z(h) = zvar(k, h + 1).scaled(GaussianRational(k * (h + 1)) * im);

    // Z+ = (1/k) z0^2 dz0 + z0 w dw + (z1 z0 - w/2) dz1
    //      + sum_{h=1..k-1} (z_{h+1} z0 + (1 - h/k) z_h) dz_{h+1}
    mf.ascend.z(0) = z0pow(k, 2).scaled(GaussianRational(Rational(1, k)));
    mf.ascend.w() = zvar(k, 0) * wvar(k);
    mf.ascend.z(1) = zvar(k, 1) * zvar(k, 0) - wvar(k).scaled(half);
    for (long h = 1; h <= k - 1; ++h)
        mf.ascend.z(h + 1) += zvar(k, h + 1) * zvar(k, 0)
                              + zvar(k, h).scaled(GaussianRational(Rational(k - h, k)));

    // Z'+ = -(i/k) z0^2 dz0 - i z0 w dw + (-i z1 z0 - (i/2) w) dz1
    //       + sum (-i z_{h+1} z0 + i (1 - h/k) z_h) dz_{h+1}
    mf.ascend_rot.z(0) = z0pow(k, 2).scaled(GaussianRational(Rational(-1, k)) * im);
    mf.ascend_rot.w() = (zvar(k, 0) * wvar(k)).scaled(-im);
    mf.ascend_rot.z(1) = (zvar(k, 1) * zvar(k, 0)).scaled(-im) - wvar(k).scaled(half * im);
    for (long h = 1; h <= k - 1; ++h)
        mf.ascend_rot.z(h + 1) += (zvar(k, h + 1) * zvar(k, 0)).scaled(-im)
                                  + zvar(k, h).scaled(GaussianRational(Rational(k - h, k)) * im);

    // H = 2 (k w dw + z0 dz0 + sum (k-h) z_h dz_h)
    mf.cartan.w() = wvar(k).scaled(GaussianRational(2 * k));
    mf.cartan.z(0) = zvar(k, 0).scaled(GaussianRational(2));
    for (long h = 1; h <= k - 1; ++h)
        mf.cartan.z(h) = zvar(k, h).scaled(GaussianRational(2 * (k - h)));

    return mf;
}

std::map<std::string, HoloField> ModelFields::named() const {
    std::map<std::string, HoloField> all(abelian);
    all.emplace("E", euler);
    all.emplace("J", rot);
    all.emplace("K", weight);
    all.emplace("Z-", descend);
    all.emplace("Z'-", descend_rot);
    all.emplace("Z+", ascend);
    all.emplace("Z'+", ascend_rot);
    all.emplace("H", cartan);
    return all;
}

bool vanishes_at_origin(const HoloField& f) {
    std::size_t nvars = VarSet{f.k()}.count();
    Mono constant(nvars, 0);
    auto has_constant = [&](const Poly& p) {
        return p.terms().find(constant) != p.terms().end();
    };
    if (has_constant(f.w())) return false;
    for (long h = 0; h <= f.k(); ++h)
        if (has_constant(f.z(h))) return false;
    return true;
}

}  // namespace crwb
