#ifndef LIE4_VERIFY_HPP
#define LIE4_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lie4/discover.hpp"
#include "lie4/groebner.hpp"
#include "lie4/hilbert.hpp"

namespace lie4 {

struct VerifyOptions {
    std::uint64_t seed = 0;
    double budget_seconds = 5400.0;
    bool run_stretch = true;
    std::ostream* out = nullptr;      // pass/fail lines
    std::ostream* progress = nullptr; // long-run progress
};

enum class CriterionStatus { pass, fail, skipped };

struct CriterionResult {
    int number = 0;
    std::string name;
    bool stretch = false;
    CriterionStatus status = CriterionStatus::fail;
    std::string detail;
    double seconds = 0.0;
};

struct VerifySummary {
    std::vector<CriterionResult> results;
    bool budget_exceeded_required = false;

    bool all_required_pass() const;
};

VerifySummary run_acceptance(const VerifyOptions& opts);

// Pipeline behind `component`: discovery plus the optional Groebner/Hilbert
// step on the certified minimal generators.
struct ComponentRun {
    DiscoveredComponent discovered;
    std::optional<HilbertPolynomial> hilbert;
    double discover_seconds = 0.0;
    double groebner_seconds = 0.0;
};

ComponentRun run_component(int component, int max_degree, std::uint64_t seed,
                           bool with_hilbert, double budget_seconds,
                           std::ostream* progress);

// S-polynomials of basis pairs reduce to zero: exhaustive for bases of at
// most exhaustive_limit elements, sampled otherwise.
bool spolys_reduce_to_zero(const IdealBasis& I, std::size_t exhaustive_limit = 60,
                           std::size_t samples = 200, std::uint64_t seed = 0);

} // namespace lie4

#endif
