// Acceptance suite: runs every criterion at full sample counts and prints
// one PASS/FAIL line per criterion. Optional arguments: --quick,
// --suite <selector>, --json <path>.
#include "gue/errors.hpp"
#include "gue/verify.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>

int main(int argc, char** argv)
{
    gue::verify::Options options;
    options.log = &std::cout;
    std::string suite = "all";
    std::string json_path;
    for (int i = 1; i < argc; ++i) {
        const std::string_view arg = argv[i];
        if (arg == "--quick") {
            options.quick = true;
        } else if (arg == "--suite" && i + 1 < argc) {
            suite = argv[++i];
        } else if (arg == "--json" && i + 1 < argc) {
            json_path = argv[++i];
        } else {
            std::cerr << "usage: acceptance [--quick] [--suite S] [--json PATH]\n";
            return 1;
        }
    }

    std::vector<gue::verify::CriterionResult> results;
    try {
        results = gue::verify::run_suite(suite, options);
    } catch (const std::exception& e) {
        std::cerr << "acceptance: " << e.what() << '\n';
        return 2;
    }

    std::cout << "\nsummary\n";
    int failed = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %d %s (%zu checks, %.1fs)\n", r.pass() ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.checks.size(), r.seconds);
        failed += r.pass() ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", results.size(), failed);
    if (!json_path.empty()) {
        std::ofstream(json_path) << gue::verify::to_json(results, options) << '\n';
    }
    return failed == 0 ? 0 : 1;
}
