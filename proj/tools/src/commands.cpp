#include "crwbcli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <ostream>
#include <sstream>

#include "crwb/model_verify.hpp"

namespace crwbcli {

using crwb::CRAlgebra;
using crwb::FamilyInstance;
using crwb::Subspace;

std::vector<long> parse_k_spec(const std::string& spec) {
    std::vector<long> ks;
    std::stringstream ss(spec);
    std::string part;
    auto parse_long = [](const std::string& s) {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("bad k value: " + s);
        return v;
    };
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw std::invalid_argument("empty k value");
        auto dots = part.find("..");
        if (dots != std::string::npos) {
            long lo = parse_long(part.substr(0, dots));
            long hi = parse_long(part.substr(dots + 2));
            if (lo > hi) throw std::invalid_argument("empty k range: " + part);
            for (long k = lo; k <= hi; ++k) ks.push_back(k);
        } else {
            ks.push_back(parse_long(part));
        }
    }
    if (ks.empty()) throw std::invalid_argument("no k values given");
    for (long k : ks)
        if (k < 1) throw std::invalid_argument("k must be >= 1");
    return ks;
}

std::size_t default_max_steps() {
    if (const char* env = std::getenv("CRWB_MAX_STEPS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<std::size_t>(v);
        } catch (...) {
        }
    }
    return 64;
}

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report_timing(const Options& opt, std::ostream& err, const std::string& what, const Timer& t) {
    if (opt.timing) err << "# timing: " << what << " took " << t.ms() << " ms\n";
}

struct Unit {
    long k = -1;             // -1 when the input came from a file
    std::string input_path;  // empty for generated families
};

std::vector<Unit> units_for(const Options& opt) {
    std::vector<Unit> units;
    if (!opt.input_path.empty()) {
        if (!opt.ks.empty())
            throw std::invalid_argument("give either --k or --input, not both");
        units.push_back({-1, opt.input_path});
    } else {
        if (opt.ks.empty()) throw std::invalid_argument("missing --k or --input");
        for (long k : opt.ks) units.push_back({k, ""});
    }
    return units;
}

struct LoadedInput {
    CRAlgebraDocument doc;
    CRAlgebra algebra;
    std::string digest_hex;
    ordered_json source;  // "k" or "file"
};

LoadedInput load_unit(const Unit& u) {
    if (u.k >= 1) {
        FamilyInstance fam = crwb::build_family(u.k);
        CRAlgebraDocument doc = document_from_family(fam);
        ordered_json src{{"k", u.k}};
        std::string d = digest(document_to_json(doc));
        return {std::move(doc), crwb::to_cr_algebra(fam), std::move(d), std::move(src)};
    }
    CRAlgebraDocument doc = load_document_file(u.input_path);
    ordered_json src{{"file", u.input_path}};
    std::string d = digest(document_to_json(doc));
    CRAlgebra alg = validate(doc);
    return {std::move(doc), std::move(alg), std::move(d), std::move(src)};
}

// Runs one job per unit (forking to a small pool when --jobs > 1) and merges
// results in unit order. Each job returns (exit code, certificate).
using JobResult = std::pair<int, ordered_json>;

std::vector<JobResult> run_units(const std::vector<Unit>& units, int jobs,
                                 const std::function<JobResult(const Unit&)>& job) {
    std::vector<JobResult> results(units.size());
    if (jobs <= 1 || units.size() <= 1) {
        for (std::size_t i = 0; i < units.size(); ++i) results[i] = job(units[i]);
        return results;
    }
    std::vector<std::future<JobResult>> futures;
    futures.reserve(units.size());
    for (const auto& u : units)
        futures.push_back(std::async(std::launch::async, [&job, &u] { return job(u); }));
    for (std::size_t i = 0; i < units.size(); ++i) results[i] = futures[i].get();
    return results;
}

int merged_exit(const std::vector<JobResult>& results) {
    int code = kExitOk;
    for (const auto& [c, j] : results) code = std::max(code, c);
    return code;
}

void emit_json(std::ostream& out, std::vector<JobResult>& results) {
    if (results.size() == 1) {
        out << results[0].second.dump(2) << "\n";
        return;
    }
    ordered_json arr = ordered_json::array();
    for (auto& [c, j] : results) arr.push_back(std::move(j));
    out << arr.dump(2) << "\n";
}

ordered_json subspace_json(const crwb::LieAlgebra& g, const Subspace& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& b : s.basis()) arr.push_back(g.describe(b));
    return ordered_json{{"dim", s.dim()}, {"basis", arr}};
}

std::string echo_family(const Options& opt, long k) {
    return "family --k " + std::to_string(k) + " --format " + opt.format;
}

}  // namespace

int run_family(const Options& opt, std::ostream& out, std::ostream& err) {
    Timer timer;
    std::vector<Unit> units = units_for(opt);
    if (!opt.input_path.empty()) throw std::invalid_argument("family takes --k, not --input");

    auto job = [&](const Unit& u) -> JobResult {
        FamilyInstance fam = crwb::build_family(u.k);
        CRAlgebraDocument doc = document_from_family(fam);
        ordered_json doc_json = document_to_json(doc);
        if (opt.format == "json") return {kExitOk, doc_json};

        CRAlgebra alg = crwb::to_cr_algebra(fam);
        auto dims = crwb::cr_dimensions(alg);
        ordered_json cert;
        cert["command"] = echo_family(opt, u.k);
        cert["digest"] = digest(doc_json);
        cert["k"] = u.k;
        cert["dim_g"] = fam.g.dim();
        cert["dim_f"] = fam.f.dim();
        cert["grades"] = *fam.g.grades();
        cert["jacobi_valid"] = crwb::check_jacobi(fam.g).ok();
        cert["grading_valid"] = crwb::check_grading(fam.g).ok();
        cert["involution_valid"] = crwb::check_involution(fam.g, fam.tau).report.ok();
        cert["f_subalgebra"] = crwb::is_subalgebra(fam.g, fam.f);
        cert["cr_dim"] = dims.cr_dim;
        cert["cr_codim"] = dims.cr_codim;
        return {kExitOk, cert};
    };

    auto results = run_units(units, opt.jobs, job);
    if (opt.format == "json") {
        emit_json(out, results);
    } else {
        for (auto& [code, cert] : results) {
            out << "== " << cert["command"].get<std::string>() << " ==\n";
            out << "input digest: " << cert["digest"].get<std::string>() << "\n";
            out << "dim g = " << cert["dim_g"] << " (complex), dim f = " << cert["dim_f"] << "\n";
            out << "grades:";
            for (const auto& g : cert["grades"]) out << " " << g;
            out << "\n";
            out << "gates: jacobi " << (cert["jacobi_valid"].get<bool>() ? "ok" : "FAIL")
                << ", grading " << (cert["grading_valid"].get<bool>() ? "ok" : "FAIL")
                << ", involution " << (cert["involution_valid"].get<bool>() ? "ok" : "FAIL")
                << ", f subalgebra " << (cert["f_subalgebra"].get<bool>() ? "ok" : "FAIL") << "\n";
            out << "CR dimension " << cert["cr_dim"] << ", CR codimension " << cert["cr_codim"]
                << "\n";
        }
    }
    report_timing(opt, err, "family", timer);
    return merged_exit(results);
}

int run_freeman(const Options& opt, std::ostream& out, std::ostream& err) {
    Timer timer;
    std::vector<Unit> units = units_for(opt);

    auto job = [&](const Unit& u) -> JobResult {
        LoadedInput in = load_unit(u);
        crwb::FreemanSequence seq = crwb::freeman_sequence(in.algebra, opt.max_steps);
        auto dims = crwb::cr_dimensions(in.algebra);

        ordered_json cert;
        std::string cmd = "freeman";
        if (u.k >= 1) cmd += " --k " + std::to_string(u.k);
        else cmd += " --input " + u.input_path;
        cmd += " --max-steps " + std::to_string(opt.max_steps);
        cert["command"] = cmd;
        cert["digest"] = in.digest_hex;
        cert["input"] = in.source;
        cert["cr_dim"] = dims.cr_dim;
        cert["cr_codim"] = dims.cr_codim;
        ordered_json steps = ordered_json::array();
        for (const auto& s : seq.steps) steps.push_back(subspace_json(in.algebra.g(), s));
        cert["steps"] = steps;
        cert["stabilization_index"] = seq.stabilization_index;
        cert["verdict"] = crwb::verdict_name(seq.verdict);
        if (seq.verdict == crwb::CRVerdict::kNondegenerate) cert["order"] = seq.order;

        int code = kExitOk;
        if (opt.expect_order >= 0 &&
            (seq.verdict != crwb::CRVerdict::kNondegenerate || seq.order != opt.expect_order))
            code = kExitVerificationFailed;
        return {code, cert};
    };

    auto results = run_units(units, opt.jobs, job);
    if (opt.format == "json") {
        emit_json(out, results);
    } else {
        for (auto& [code, cert] : results) {
            out << "== " << cert["command"].get<std::string>() << " ==\n";
            out << "input digest: " << cert["digest"].get<std::string>() << "\n";
            out << "CR dimension " << cert["cr_dim"] << ", CR codimension " << cert["cr_codim"]
                << "\n";
            std::size_t idx = 0;
            for (const auto& s : cert["steps"]) {
                out << "f^" << idx++ << ": dim " << s["dim"] << "  span{";
                bool first = true;
                for (const auto& b : s["basis"]) {
                    if (!first) out << ", ";
                    out << b.get<std::string>();
                    first = false;
                }
                out << "}\n";
            }
            out << "verdict: " << cert["verdict"].get<std::string>();
            if (cert.contains("order")) out << "(" << cert["order"] << ")";
            out << ", stabilized at index " << cert["stabilization_index"] << "\n";
            if (code == kExitVerificationFailed)
                err << "expected order " << opt.expect_order << " but got "
                    << (cert.contains("order") ? cert["order"].dump() : cert["verdict"].dump())
                    << "\n";
        }
    }
    report_timing(opt, err, "freeman", timer);
    return merged_exit(results);
}

int run_levi(const Options& opt, std::ostream& out, std::ostream& err) {
    Timer timer;
    std::vector<Unit> units = units_for(opt);

    auto job = [&](const Unit& u) -> JobResult {
        LoadedInput in = load_unit(u);
        crwb::LeviMatrix lm = crwb::levi_matrix(in.algebra, opt.order);
        Subspace lk = lm.left_kernel_extended();

        ordered_json cert;
        std::string cmd = "levi";
        if (u.k >= 1) cmd += " --k " + std::to_string(u.k);
        else cmd += " --input " + u.input_path;
        cmd += " --order " + std::to_string(opt.order);
        cert["command"] = cmd;
        cert["digest"] = in.digest_hex;
        cert["input"] = in.source;
        cert["order"] = lm.order;
        cert["rows"] = lm.row_labels;
        cert["cols"] = lm.col_labels;
        cert["targets"] = lm.target_labels;
        ordered_json blocks = ordered_json::array();
        for (std::size_t t = 0; t < lm.entries.size(); ++t) {
            ordered_json rows = ordered_json::array();
            for (std::size_t i = 0; i < lm.row_basis.size(); ++i) {
                ordered_json row = ordered_json::array();
                for (std::size_t j = 0; j < lm.col_basis.size(); ++j)
                    row.push_back(lm.entries[t].at(i, j).str());
                rows.push_back(row);
            }
            blocks.push_back(ordered_json{{"target", lm.target_labels[t]}, {"matrix", rows}});
        }
        cert["entries"] = blocks;
        cert["rank"] = lm.rank();
        cert["left_kernel_dim_mod_t"] = lm.left_kernel_coords().dim();
        cert["left_kernel_extended"] = subspace_json(in.algebra.g(), lk);
        return {kExitOk, cert};
    };

    auto results = run_units(units, opt.jobs, job);
    if (opt.format == "json") {
        emit_json(out, results);
    } else {
        for (auto& [code, cert] : results) {
            out << "== " << cert["command"].get<std::string>() << " ==\n";
            out << "input digest: " << cert["digest"].get<std::string>() << "\n";
            out << "order " << cert["order"] << " Levi form, rank " << cert["rank"] << "\n";
            out << "rows:";
            for (const auto& r : cert["rows"]) out << " " << r.get<std::string>();
            out << "\ncols:";
            for (const auto& c : cert["cols"]) out << " " << c.get<std::string>();
            out << "\n";
            for (const auto& block : cert["entries"]) {
                out << "component " << block["target"].get<std::string>() << ":\n";
                for (const auto& row : block["matrix"]) {
                    out << "  [";
                    bool first = true;
                    for (const auto& x : row) {
                        if (!first) out << ", ";
                        out << x.get<std::string>();
                        first = false;
                    }
                    out << "]\n";
                }
            }
            out << "left kernel (mod t) dim " << cert["left_kernel_dim_mod_t"] << ", extended: ";
            out << "dim " << cert["left_kernel_extended"]["dim"] << " span{";
            bool first = true;
            for (const auto& b : cert["left_kernel_extended"]["basis"]) {
                if (!first) out << ", ";
                out << b.get<std::string>();
                first = false;
            }
            out << "}\n";
        }
    }
    report_timing(opt, err, "levi", timer);
    return merged_exit(results);
}

int run_verify_model(const Options& opt, std::ostream& out, std::ostream& err) {
    Timer timer;
    if (!opt.input_path.empty()) throw std::invalid_argument("verify-model takes --k, not --input");
    std::vector<Unit> units = units_for(opt);

    std::vector<std::string> suites = opt.suites;
    if (suites.empty()) suites = crwb::all_suite_names();
    for (const auto& s : suites) {
        bool known = false;
        for (const auto& name : crwb::all_suite_names()) known |= (name == s);
        if (!known) throw std::invalid_argument("unknown suite: " + s);
    }

    auto job = [&](const Unit& u) -> JobResult {
        ordered_json cert;
        std::string cmd = "verify-model --k " + std::to_string(u.k) + " --suites ";
        for (std::size_t i = 0; i < suites.size(); ++i) cmd += (i ? "," : "") + suites[i];
        cert["command"] = cmd;
        cert["k"] = u.k;

        bool all_pass = true;
        ordered_json suites_json = ordered_json::array();
        for (const auto& name : suites) {
            crwb::SuiteReport rep = crwb::run_suite(name, u.k);
            all_pass = all_pass && rep.passed();
            ordered_json items = ordered_json::array();
            for (const auto& it : rep.items) {
                ordered_json item{{"label", it.label}, {"pass", it.pass}, {"gated", it.gated}};
                if (!it.note.empty()) item["note"] = it.note;
                items.push_back(item);
            }
            suites_json.push_back(ordered_json{{"name", rep.suite},
                                               {"passed", rep.passed()},
                                               {"gated_identities", rep.gated_count()},
                                               {"items", items}});
        }
        cert["suites"] = suites_json;
        cert["passed"] = all_pass;
        return {all_pass ? kExitOk : kExitVerificationFailed, cert};
    };

    auto results = run_units(units, opt.jobs, job);
    if (opt.format == "json") {
        emit_json(out, results);
    } else {
        for (auto& [code, cert] : results) {
            out << "== " << cert["command"].get<std::string>() << " ==\n";
            for (const auto& suite : cert["suites"]) {
                out << "suite " << suite["name"].get<std::string>() << ": "
                    << (suite["passed"].get<bool>() ? "PASS" : "FAIL") << " ("
                    << suite["gated_identities"] << " gated identities)\n";
                for (const auto& item : suite["items"]) {
                    bool pass = item["pass"].get<bool>();
                    bool gated = item["gated"].get<bool>();
                    if (gated && !pass) {
                        out << "  FAIL: " << item["label"].get<std::string>() << "\n";
                        err << "identity failed: " << item["label"].get<std::string>() << "\n";
                    } else if (!gated) {
                        out << "  info: " << item["label"].get<std::string>() << " -> "
                            << (pass ? "holds" : "does not hold");
                        if (item.contains("note")) out << "  (" << item["note"].get<std::string>() << ")";
                        out << "\n";
                    }
                }
            }
            out << "overall: " << (cert["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
        }
    }
    report_timing(opt, err, "verify-model", timer);
    return merged_exit(results);
}

}  // namespace crwbcli
