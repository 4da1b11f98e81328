#ifndef LIE4_HILBERT_HPP
#define LIE4_HILBERT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lie4/groebner.hpp"
#include "lie4/polynomial.hpp"

namespace lie4 {

Int binomial(long n, long k);

// Hilbert polynomial in the [P^d] basis: n -> sum coeffs[d] * C(n+d, d).
struct HilbertPolynomial {
    std::map<int, Int> coeffs; // only nonzero entries

    int dim() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
    Int degree() const { return coeffs.empty() ? Int(0) : coeffs.rbegin()->second; }
    Rat evaluate(long n) const;
    // e.g. "55*[P^11] - 120*[P^10] + 86*[P^9] - 20*[P^8]"
    std::string to_string() const;

    bool operator==(const HilbertPolynomial&) const = default;
};

// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of R/<lead_terms>,
// by pivot-variable recursion on the monomial ideal. Index = power of t.
std::vector<Int> hilbert_numerator(const std::vector<Monomial>& lead_terms,
                                   int nvars);

// Hilbert function of R/<lead_terms> at degree d, expanded from the
// numerator.
Int hilbert_function(const std::vector<Int>& numerator, int nvars, int d);

// Requires a Groebner basis of a homogeneous ideal; <1> gives the zero
// polynomial.
HilbertPolynomial hilbert_polynomial(const IdealBasis& I);

// (projective dimension, degree) = (dim, leading coefficient).
std::pair<int, Int> dim_and_degree(const IdealBasis& I);

} // namespace lie4

#endif
