#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gue::verify {

/// Decision rule linking a statistic to its threshold.
enum class Relation { less, less_equal, within };

struct Check {
    std::string test;
    double statistic = 0.0;
    double threshold = 0.0;
    Relation relation = Relation::less;
    double threshold_low = 0.0;  // lower edge when relation == within
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::vector<Check> checks;
    double seconds = 0.0;

    bool pass() const;
};

struct Options {
    bool quick = false;
    std::uint64_t seed = 0x5eed2024ULL;
    std::ostream* log = nullptr;  // progress lines, may be null
};

struct Criterion {
    int id;
    std::string_view name;
    std::string_view summary;
    std::function<std::vector<Check>(const Options&)> run;
};

const std::vector<Criterion>& criteria();

/*!
 * Runs the criteria selected by `suite`: "all", a number ("4"), "c4", or a
 * criterion name ("sublinearity"). Comma-separated lists are accepted.
 * Throws ParameterError on an unknown selector.
 */
std::vector<CriterionResult> run_suite(std::string_view suite, const Options& options);

/// JSON report: one object per criterion with its checks.
std::string to_json(const std::vector<CriterionResult>& results, const Options& options);

Check less_than(std::string test, double statistic, double threshold, std::string detail = {});
Check at_most(std::string test, double statistic, double threshold, std::string detail = {});
Check in_window(std::string test, double statistic, double low, double high,
                std::string detail = {});

}  // namespace gue::verify
