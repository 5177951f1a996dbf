#ifndef CRWB_MODEL_VERIFY_HPP
#define CRWB_MODEL_VERIFY_HPP

#include <vector>

#include "crwb/model_fields.hpp"
#include "crwb/su2_family.hpp"

namespace crwb {

struct CheckItem {
    std::string label;
    bool pass;
    /// Non-gated items are recorded observations; they never fail a suite.
    bool gated = true;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    long k;
    std::vector<CheckItem> items;

    bool passed() const;
    std::size_t gated_count() const;
    std::vector<CheckItem> failures() const;
};

/// Tangency and pairwise commutation of the abelian family, plus R-linear
/// independence of its (k+1)^2 members.
SuiteReport verify_abelian(long k);

/// The scaling/rotation/weight fields: tangency, mutual commutation, the
/// rotation action on the abelian family, and K+E acting as -(k+1) id.
SuiteReport verify_cpx(long k);

/// The raising/lowering quadruple: tangency, commutation and rotation
/// relations, and the pairing against the rotation generator.
SuiteReport verify_ascdes(long k);

/// H = [Z+,-Z-] = [Z'+,-Z'-], the sl2 relations of (Z+, -Z-, H) and the
/// 2Z-grading of the abelian family under ad H.
SuiteReport verify_sl2(long k);

/// The compact triple built from real parts of Z+ and -Z-; the three
/// commutator relations are gated, tangency observations are recorded.
SuiteReport verify_su2(long k);

/// The ad(Z+)-orbit of W: a (2k+1)-dimensional irreducible module with
/// simple H-eigenvalues, plus the annihilation statements.
SuiteReport verify_irrep(long k);

/// Bracket-preserving linear map from the abstract family onto the model
/// fields, with isotropy and tangency certificates.
SuiteReport iso_certificate(long k);

const std::vector<std::string>& all_suite_names();
SuiteReport run_suite(const std::string& name, long k);

/// Throws std::invalid_argument if any coefficient exceeds total degree 8.
void guard_field_degree(const HoloField& f, const std::string& context);

}  // namespace crwb

#endif
