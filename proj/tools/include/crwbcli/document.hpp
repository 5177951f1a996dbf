#ifndef CRWBCLI_DOCUMENT_HPP
#define CRWBCLI_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crwb/cr_algebra.hpp"

namespace crwbcli {

using ordered_json = nlohmann::ordered_json;

class DocumentError : public std::runtime_error {
public:
    DocumentError(std::string what, std::vector<std::string> details = {})
        : std::runtime_error(std::move(what)), details_(std::move(details)) {}
    const std::vector<std::string>& details() const { return details_; }

private:
    std::vector<std::string> details_;
};

/// Wire format for a CR algebra: basis labels, sparse brackets for i < j,
/// the antilinear involution matrix, spanning vectors of f and optional
/// integer grades. Gaussian rationals travel as {"re":"p/q","im":"p/q"}.
struct CRAlgebraDocument {
    struct BracketTerm {
        std::size_t k;
        crwb::GaussianRational value;
    };
    struct BracketEntry {
        std::size_t i, j;
        std::vector<BracketTerm> coeffs;
    };

    std::vector<std::string> basis;
    std::vector<BracketEntry> brackets;
    crwb::Matrix tau{0, 0};
    std::vector<crwb::Vec> f;
    std::optional<std::vector<long>> grades;
};

ordered_json gaussian_to_json(const crwb::GaussianRational& g);
crwb::GaussianRational gaussian_from_json(const ordered_json& j);

ordered_json document_to_json(const CRAlgebraDocument& doc);
CRAlgebraDocument document_from_json(const ordered_json& j);

CRAlgebraDocument document_from_family(const crwb::FamilyInstance& fam);

/// Runs the structural gates (Jacobi, grading, involution, subalgebra).
/// Throws DocumentError listing every violation.
crwb::CRAlgebra validate(const CRAlgebraDocument& doc);

CRAlgebraDocument load_document_file(const std::string& path);

/// FNV-1a over the canonical serialization, as fixed-width hex.
std::string digest(const ordered_json& j);

}  // namespace crwbcli

#endif
