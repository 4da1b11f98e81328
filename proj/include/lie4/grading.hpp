#ifndef LIE4_GRADING_HPP
#define LIE4_GRADING_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "lie4/polynomial.hpp"

namespace lie4 {

// Z^4 multidegree, deg(a_ijk) = e_i + e_j - e_k. Parameter variables
// (chart entries, elimination tags, x, y, ...) carry multidegree 0.
using MultiDegree = std::array<int, 4>;

// Multidegree of a single variable, parsed from its name.
MultiDegree var_multidegree(const std::string& name);

MultiDegree monomial_multidegree(const UniversePtr& u, const Monomial& m);

// The common multidegree of all terms, or nullopt when terms disagree.
// The zero polynomial reports (0,0,0,0).
std::optional<MultiDegree> multidegree(const Polynomial& f);

// All degree-d monomials of the universe, grouped by multidegree. Bucket
// keys ascend lexicographically; monomials within a bucket descend in
// grevlex. Total count is C(nvars+d-1, d).
std::map<MultiDegree, std::vector<Monomial>> degree_buckets(const UniversePtr& u,
                                                            int d);

// Dimension of the span, computed bucket by bucket. Every polynomial must
// be multigraded (single multidegree); total degrees may mix.
std::size_t graded_rank(const std::vector<Polynomial>& polys);

// dim(span A  ∩  span B) via rank(A) + rank(B) - rank(A ∪ B).
std::size_t graded_intersection_dim(const std::vector<Polynomial>& a,
                                    const std::vector<Polynomial>& b);

} // namespace lie4

#endif
