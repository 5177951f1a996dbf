#ifndef CRWB_MODEL_FIELDS_HPP
#define CRWB_MODEL_FIELDS_HPP

#include <map>
#include <string>

#include "crwb/vector_field.hpp"

namespace crwb {

/// The catalogue of holomorphic vector fields with tangent real parts on the
/// model hypersurface Re(w) = 2 sum_h Re(z_0^h zbar_h).
struct ModelFields {
    long k;

    /// The abelian family: Z_h, Z'_h (1<=h<=k), W, A_{h,j}, A'_{h,j}
    /// (1<=h<j<=k) and A'_h, keyed by display label. (k+1)^2 fields.
    std::map<std::string, HoloField> abelian;

    HoloField euler;        // E: scaling field, (k+1)w dw + z0 dz0 + sum (k+1-h) z_h dz_h
    HoloField rot;          // J: generator of the rotation action
    HoloField weight;       // K: -z0 dz0 + sum h z_h dz_h
    HoloField descend;      // Z-
    HoloField descend_rot;  // Z'-
    HoloField ascend;       // Z+
    HoloField ascend_rot;   // Z'+
    HoloField cartan;       // H = 2(k w dw + z0 dz0 + sum (k-h) z_h dz_h)

    /// Every field keyed by label, the abelian ones plus
    /// E, J, K, Z-, Z'-, Z+, Z'+, H. Cardinality (k+1)^2 + 8.
    std::map<std::string, HoloField> named() const;
};

ModelFields model_fields(long k);

/// True iff every coefficient has zero constant term.
bool vanishes_at_origin(const HoloField& f);

}  // namespace crwb

#endif
