#ifndef LIE4_CHOW_HPP
#define LIE4_CHOW_HPP

#include <array>

#include "lie4/rat.hpp"

namespace lie4 {

// Element of Q[x,y]/(x^4, y^4): multiplication drops every term with an
// x- or y-exponent of 4 or more.
class TruncatedSeries {
public:
    TruncatedSeries() = default;

    static TruncatedSeries constant(Rat c);
    static TruncatedSeries x();
    static TruncatedSeries y();

    Rat& at(int i, int j) { return c_[i * 4 + j]; }
    const Rat& at(int i, int j) const { return c_[i * 4 + j]; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const = default;

    TruncatedSeries pow(unsigned e) const; // repeated squaring
    // Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries inverse() const;

    // Terms of total degree k only (with i, j <= 3 as always).
    TruncatedSeries total_degree_part(int k) const;

private:
    std::array<Rat, 16> c_{};
};

// Coefficient of x^3 in (1-3x)/(1-x)^10; checks the full expansion
// 1 + 7x + 25x^2 + 55x^3 and returns 55.
Int degree_c1();

// Coefficient of x^3 y^3 in (x+y) * s_5 where s is the Segre product
// 1/(1+y-2x) * (1-2y)^4/(1-y)^17 * (1+x-y)^4/(1+x); returns 361.
Int degree_c2();

} // namespace lie4

#endif
