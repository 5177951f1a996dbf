#include "crwbcli/document.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace crwbcli {

using crwb::GaussianRational;
using crwb::Matrix;
using crwb::Vec;

ordered_json gaussian_to_json(const GaussianRational& g) {
    return ordered_json{{"re", crwb::rational_to_fraction(g.re())},
                        {"im", crwb::rational_to_fraction(g.im())}};
}

GaussianRational gaussian_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        throw DocumentError("scalar must be an object with \"re\" and \"im\"");
    try {
        return GaussianRational(crwb::rational_from_fraction(j.at("re").get<std::string>()),
                                crwb::rational_from_fraction(j.at("im").get<std::string>()));
    } catch (const std::invalid_argument& e) {
        throw DocumentError(std::string("bad scalar: ") + e.what());
    }
}

ordered_json document_to_json(const CRAlgebraDocument& doc) {
    ordered_json j;
    j["basis"] = doc.basis;
    if (doc.grades) j["grades"] = *doc.grades;

    ordered_json brackets = ordered_json::array();
    for (const auto& entry : doc.brackets) {
        ordered_json coeffs = ordered_json::array();
        for (const auto& term : entry.coeffs)
            coeffs.push_back(ordered_json{{"k", term.k}, {"value", gaussian_to_json(term.value)}});
        brackets.push_back(ordered_json{{"i", entry.i}, {"j", entry.j}, {"coeffs", coeffs}});
    }
    j["brackets"] = brackets;

    ordered_json tau = ordered_json::array();
    for (std::size_t r = 0; r < doc.tau.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < doc.tau.cols(); ++c) row.push_back(gaussian_to_json(doc.tau.at(r, c)));
        tau.push_back(row);
    }
    j["tau"] = tau;

    ordered_json f = ordered_json::array();
    for (const auto& v : doc.f) {
        ordered_json row = ordered_json::array();
        for (const auto& x : v) row.push_back(gaussian_to_json(x));
        f.push_back(row);
    }
    j["f"] = f;
    return j;
}

CRAlgebraDocument document_from_json(const ordered_json& j) {
    CRAlgebraDocument doc;
    if (!j.is_object()) throw DocumentError("document must be a JSON object");
    if (!j.contains("basis") || !j.at("basis").is_array())
        throw DocumentError("document needs a \"basis\" array");
    for (const auto& b : j.at("basis")) doc.basis.push_back(b.get<std::string>());
    std::size_t n = doc.basis.size();
    if (n == 0) throw DocumentError("empty basis");

    if (j.contains("grades")) {
        std::vector<long> grades;
        for (const auto& g : j.at("grades")) grades.push_back(g.get<long>());
        if (grades.size() != n) throw DocumentError("grades length does not match basis");
        doc.grades = std::move(grades);
    }

    if (!j.contains("brackets") || !j.at("brackets").is_array())
        throw DocumentError("document needs a \"brackets\" array");
    for (const auto& e : j.at("brackets")) {
        CRAlgebraDocument::BracketEntry entry;
        entry.i = e.at("i").get<std::size_t>();
        entry.j = e.at("j").get<std::size_t>();
        if (entry.i >= entry.j) throw DocumentError("bracket entries must have i < j");
        if (entry.j >= n) throw DocumentError("bracket index out of range");
        for (const auto& t : e.at("coeffs")) {
            CRAlgebraDocument::BracketTerm term{t.at("k").get<std::size_t>(),
                                                gaussian_from_json(t.at("value"))};
            if (term.k >= n) throw DocumentError("bracket coefficient index out of range");
            entry.coeffs.push_back(std::move(term));
        }
        doc.brackets.push_back(std::move(entry));
    }

    if (!j.contains("tau") || !j.at("tau").is_array() || j.at("tau").size() != n)
        throw DocumentError("document needs an n x n \"tau\" matrix");
    doc.tau = Matrix(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const auto& row = j.at("tau").at(r);
        if (!row.is_array() || row.size() != n) throw DocumentError("tau row has wrong length");
        for (std::size_t c = 0; c < n; ++c) doc.tau.at(r, c) = gaussian_from_json(row.at(c));
    }

    if (!j.contains("f") || !j.at("f").is_array()) throw DocumentError("document needs an \"f\" array");
    for (const auto& row : j.at("f")) {
        if (!row.is_array() || row.size() != n) throw DocumentError("f vector has wrong length");
        Vec v(n);
        for (std::size_t c = 0; c < n; ++c) v[c] = gaussian_from_json(row.at(c));
        doc.f.push_back(std::move(v));
    }
    return doc;
}

CRAlgebraDocument document_from_family(const crwb::FamilyInstance& fam) {
    CRAlgebraDocument doc;
    doc.basis = fam.g.labels();
    doc.grades = fam.g.grades();
    std::size_t n = fam.g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec& c = fam.g.structure(i, j);
            CRAlgebraDocument::BracketEntry entry{i, j, {}};
            for (std::size_t m = 0; m < n; ++m)
                if (!c[m].is_zero()) entry.coeffs.push_back({m, c[m]});
            if (!entry.coeffs.empty()) doc.brackets.push_back(std::move(entry));
        }
    doc.tau = fam.tau.matrix();
    doc.f = fam.f.basis();
    return doc;
}

crwb::CRAlgebra validate(const CRAlgebraDocument& doc) {
    crwb::LieAlgebra::BracketTable table;
    std::size_t n = doc.basis.size();
    for (const auto& entry : doc.brackets) {
        Vec c(n);
        for (const auto& term : entry.coeffs) c[term.k] = term.value;
        table[{entry.i, entry.j}] = std::move(c);
    }
    crwb::LieAlgebra g(doc.basis, table, doc.grades);

    std::vector<std::string> violations;
    for (const auto& v : crwb::check_jacobi(g).violations) violations.push_back(v);
    for (const auto& v : crwb::check_grading(g).violations) violations.push_back(v);
    if (!violations.empty()) throw DocumentError("document fails the Jacobi/grading gate", violations);

    try {
        return crwb::CRAlgebra::validated(std::move(g), crwb::AntilinearMap(doc.tau),
                                          crwb::Subspace::span(n, doc.f));
    } catch (const crwb::CRValidationError& e) {
        throw DocumentError(e.what(), e.violations());
    }
}

CRAlgebraDocument load_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open input file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(std::string("JSON parse error: ") + e.what());
    }
    return document_from_json(j);
}

std::string digest(const ordered_json& j) {
    std::string s = j.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace crwbcli
