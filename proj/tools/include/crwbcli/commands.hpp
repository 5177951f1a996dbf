#ifndef CRWBCLI_COMMANDS_HPP
#define CRWBCLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "crwbcli/document.hpp"

namespace crwbcli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInvalidDocument = 2;
inline constexpr int kExitUsage = 3;

struct Options {
    std::vector<long> ks;
    std::string input_path;
    std::string format = "text";
    int jobs = 1;
    bool timing = false;
    std::size_t max_steps = 64;
    long expect_order = -1;  // -1 = not asserted
    std::size_t order = 1;
    std::vector<std::string> suites;
};

/// Accepts "4", "1..8" and "1,3,5"; every value must be >= 1.
std::vector<long> parse_k_spec(const std::string& spec);

std::size_t default_max_steps();  // CRWB_MAX_STEPS or 64

int run_family(const Options& opt, std::ostream& out, std::ostream& err);
int run_freeman(const Options& opt, std::ostream& out, std::ostream& err);
int run_levi(const Options& opt, std::ostream& out, std::ostream& err);
int run_verify_model(const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace crwbcli

#endif
