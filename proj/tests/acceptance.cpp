// Acceptance suite: one pass/fail line per criterion, exit 0 iff every
// non-stretch criterion passes.
#include <cstdlib>
#include <iostream>
#include <string>

#include "lie4/verify.hpp"

int main(int argc, char** argv) {
    lie4::VerifyOptions opts;
    opts.out = &std::cout;
    opts.progress = &std::cerr;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--seed" && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
        if (a == "--budget" && i + 1 < argc) opts.budget_seconds = std::atof(argv[++i]);
        if (a == "--no-stretch") opts.run_stretch = false;
    }
    lie4::VerifySummary s = lie4::run_acceptance(opts);
    const bool ok = s.all_required_pass();
    std::cout << (ok ? "ACCEPTANCE: all required criteria pass\n"
                     : "ACCEPTANCE: required criteria FAILED\n");
    return ok ? 0 : 1;
}
