#ifndef LIE4_DISCOVER_HPP
#define LIE4_DISCOVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lie4/grading.hpp"
#include "lie4/polynomial.hpp"

namespace lie4 {

// A certification failure means a sampled nullspace vector is not actually
// in the component's ideal: the sample set was too small.
struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SampleSet {
    int component = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<Rat>> points; // pairwise distinct 24-vectors
};

struct VanishingSpace {
    int component = 0;
    int total_degree = 0;
    std::optional<MultiDegree> multidegree_filter;
    std::vector<Polynomial> basis; // homogeneous, leading coefficient 1
    bool certified = false;
};

// n distinct points of the component, from small-integer specializations
// (|value| <= 20) of its chart; singular group matrices are rejected and
// redrawn. Deterministic given (component, seed); the first k points of a
// larger draw equal a smaller draw.
SampleSet sample(int component, std::size_t n, std::uint64_t seed);

// Points needed per degree by default: twice the largest Z^4 bucket.
std::size_t default_sample_count(int degree);

// Degree-d forms vanishing on the component: per-bucket nullspaces of the
// monomialxpoint evaluation matrices, certified by exact symbolic
// substitution into the chart. samples = 0 uses the per-degree default.
VanishingSpace vanishing_space(int component, int degree, std::size_t samples,
                               std::uint64_t seed,
                               const std::optional<MultiDegree>& filter = std::nullopt,
                               bool bucketed = true, bool certify = true);

struct DiscoveredComponent {
    int component = 0;
    std::uint64_t seed = 0;
    std::map<int, int> profile;                 // every degree 1..max_degree
    std::vector<VanishingSpace> spaces;         // degrees 1..max_degree
    std::vector<Polynomial> minimal_generators; // certified new forms per degree
};

DiscoveredComponent discover_component(int component, int max_degree,
                                       std::uint64_t seed,
                                       std::size_t samples = 0);

// Minimal-generator counts dim V_d - dim(R_1 V_{d-1}) for d = 1..max_degree.
std::map<int, int> generator_profile(int component, int max_degree,
                                     std::uint64_t seed);

// Same pipeline over the union of all four components: the vanishing
// spaces are the graded pieces of the intersection of the four prime
// ideals, certified against every chart. Independent cross-check for the
// radical's minimal-generator profile.
DiscoveredComponent discover_union(int max_degree, std::uint64_t seed,
                                   std::size_t samples = 0);

// Exact test that f vanishes identically on the component (symbolic
// substitution of the chart; a zero result is a proof).
bool vanishes_on_component(int component, const Polynomial& f);

} // namespace lie4

#endif
