#include <CLI11.hpp>
#include <iostream>

#include "crwbcli/commands.hpp"

using namespace crwbcli;

int main(int argc, char** argv) {
    CLI::App app{"crwb: exact-arithmetic workbench for CR Lie algebra structures"};
    app.require_subcommand(1);

    Options opt;
    opt.max_steps = default_max_steps();
    std::string kspec;
    std::string suites_csv;

    app.add_option("--jobs", opt.jobs, "fan independent k values across worker threads")
        ->check(CLI::PositiveNumber);
    app.add_flag("--timing", opt.timing, "report wall-clock timing on stderr");

    auto add_k = [&](CLI::App* cmd) {
        cmd->add_option("--k", kspec, "k value, list or range (e.g. 2, 1,3, 1..8)");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input_path, "CR algebra document (JSON)");
    };

    CLI::App* family = app.add_subcommand("family", "build a family instance and report CR data");
    add_k(family);
    add_format(family);

    CLI::App* freeman = app.add_subcommand("freeman", "compute the Freeman sequence and verdict");
    add_k(freeman);
    add_input(freeman);
    add_format(freeman);
    freeman->add_option("--max-steps", opt.max_steps, "iteration cap (default CRWB_MAX_STEPS or 64)");
    freeman->add_option("--expect-order", opt.expect_order,
                        "exit 1 unless the verdict is nondegenerate of this order");

    CLI::App* levi = app.add_subcommand("levi", "emit a Levi form matrix of the given order");
    add_k(levi);
    add_input(levi);
    add_format(levi);
    levi->add_option("--order", opt.order, "Levi form order (>= 1)");

    CLI::App* verify = app.add_subcommand("verify-model", "run the model verification suites");
    add_k(verify);
    add_format(verify);
    verify->add_option("--suites", suites_csv,
                       "comma-separated subset of abelian,cpx,ascdes,sl2,su2,irrep,iso");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!kspec.empty()) opt.ks = parse_k_spec(kspec);
        if (!suites_csv.empty()) {
            std::stringstream ss(suites_csv);
            std::string name;
            while (std::getline(ss, name, ','))
                if (!name.empty()) opt.suites.push_back(name);
        }

        if (family->parsed()) return run_family(opt, std::cout, std::cerr);
        if (freeman->parsed()) return run_freeman(opt, std::cout, std::cerr);
        if (levi->parsed()) return run_levi(opt, std::cout, std::cerr);
        if (verify->parsed()) return run_verify_model(opt, std::cout, std::cerr);
        return kExitUsage;
    } catch (const DocumentError& e) {
        std::cerr << "invalid document: " << e.what() << "\n";
        for (const auto& d : e.details()) std::cerr << "  " << d << "\n";
        return kExitInvalidDocument;
    } catch (const crwb::CRValidationError& e) {
        std::cerr << "invalid CR algebra: " << e.what() << "\n";
        for (const auto& d : e.violations()) std::cerr << "  " << d << "\n";
        return kExitInvalidDocument;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidDocument;
    }
}
