#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace gw {

/// Where an expected value comes from.
enum class Basis {
    Theorem,  ///< a published width theorem, evaluated on a finite witness
    Derived,  ///< computed independently (enumeration, construction counts)
    Trivial,  ///< identity or definitional case
};

const char* to_string(Basis basis);

enum class Comparison { Equal, AtLeast };

struct Check {
    std::string what;
    long long expected = 0;
    long long actual = 0;
    Comparison comparison = Comparison::Equal;
    Basis basis = Basis::Derived;

    bool ok() const { return comparison == Comparison::Equal ? actual == expected : actual >= expected; }
};

enum class CaseStatus { Pass, Fail, SkippedBudget };

const char* to_string(CaseStatus status);

struct VerificationCase {
    std::string name;
    std::string claim;
    std::vector<Check> checks;
    CaseStatus status = CaseStatus::Pass;
    std::string note;
    double seconds = 0.0;
};

/// Names of the built-in cases, in run order.
std::vector<std::string> verification_case_names();

/// Runs the case named `filter`, or else every case whose name contains it
/// (all when empty). Exhaustive searches inside a case get `budget`; running
/// out of it marks the case SkippedBudget rather than failing it.
std::vector<VerificationCase> run_verification(std::string_view filter, std::chrono::milliseconds budget, unsigned workers = 1);

nlohmann::json verification_json(const std::vector<VerificationCase>& cases);

}  // namespace gw
