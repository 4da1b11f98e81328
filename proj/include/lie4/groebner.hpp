#ifndef LIE4_GROEBNER_HPP
#define LIE4_GROEBNER_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "lie4/polynomial.hpp"

namespace lie4 {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GBOptions {
    std::uint64_t max_pairs = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
    // Process S-pairs of degree <= truncate_degree only. For homogeneous
    // input the resulting leading terms are correct up to that degree.
    int truncate_degree = -1;
    // Per-variable degree weights for homogeneity, sugar and truncation
    // (empty = all ones). Lets a tag variable carry weight 0 so the
    // intersection construction stays graded.
    std::vector<int> weights;
    std::ostream* progress = nullptr;
};

struct IdealBasis {
    UniversePtr universe;
    std::vector<Polynomial> generators;
    MonomialOrder order = MonomialOrder::grevlex();
    // Set when generators form a reduced Groebner basis for the order:
    // monic, auto-reduced, every S-polynomial reduces to zero.
    bool groebner_flag = false;
};

// Reduced Groebner basis of <gens>. Unique for the order: permuting the
// input yields an identical basis. Zero generators are dropped; the zero
// ideal gives an empty basis, a unit gives {1}.
IdealBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                      const GBOptions& opts = {});

// Normal form of f against a Groebner basis.
Polynomial reduce(const Polynomial& f, const IdealBasis& I);

// true iff f lies in the ideal; requires groebner_flag.
bool membership(const Polynomial& f, const IdealBasis& I);

// Generators of <gens> ∩ Q[remaining variables], returned over the
// universe of the last n-k variables.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t k,
                                  const GBOptions& opts = {});

// Generators of I ∩ J via the tag-variable construction <tI, (1-t)J>.
std::vector<Polynomial> intersect(const std::vector<Polynomial>& I,
                                  const std::vector<Polynomial>& J,
                                  const GBOptions& opts = {});

// Counts of minimal generators per degree, dim I_d - dim(R_1 I_{d-1}),
// computed through degree-truncated bases. Input must be homogeneous.
// Degrees with count zero are omitted.
std::map<int, int> minimal_generator_degrees(const std::vector<Polynomial>& gens,
                                             int max_degree,
                                             const GBOptions& opts = {});

// Re-tag a polynomial onto a universe containing the same-named variables.
Polynomial cast_to_universe(const Polynomial& p, const UniversePtr& target);

} // namespace lie4

#endif
