#include "lie4/chow.hpp"

#include <stdexcept>

namespace lie4 {

TruncatedSeries TruncatedSeries::constant(Rat c) {
    TruncatedSeries s;
    s.at(0, 0) = std::move(c);
    return s;
}

TruncatedSeries TruncatedSeries::x() {
    TruncatedSeries s;
    s.at(1, 0) = 1;
    return s;
}

TruncatedSeries TruncatedSeries::y() {
    TruncatedSeries s;
    s.at(0, 1) = 1;
    return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries r;
    for (int k = 0; k < 16; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries r;
    for (int k = 0; k < 16; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    TruncatedSeries r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (at(i, j) == 0) continue;
            for (int k = 0; i + k < 4; ++k)
                for (int l = 0; j + l < 4; ++l)
                    r.at(i + k, j + l) += at(i, j) * o.at(k, l);
        }
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries r = constant(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
    const Rat c0 = at(0, 0);
    if (c0 == 0) throw std::invalid_argument("inverse: zero constant term");
    // s = c0 (1 + u) with u nilpotent (u^7 = 0 in this ring)
    TruncatedSeries u = *this * constant(Rat(1) / c0) - constant(1);
    TruncatedSeries inv = constant(1), up = constant(1);
    for (int k = 1; k <= 6; ++k) {
        up = up * u;
        inv = (k % 2 == 0) ? inv + up : inv - up;
    }
    return inv * constant(Rat(1) / c0);
}

TruncatedSeries TruncatedSeries::total_degree_part(int k) const {
    TruncatedSeries r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i + j == k) r.at(i, j) = at(i, j);
    return r;
}

Int degree_c1() {
    const TruncatedSeries one = TruncatedSeries::constant(1);
    const TruncatedSeries x = TruncatedSeries::x();
    const TruncatedSeries s =
        (one - TruncatedSeries::constant(3) * x) * (one - x).pow(10).inverse();

    TruncatedSeries expect = one;
    expect.at(1, 0) = 7;
    expect.at(2, 0) = 25;
    expect.at(3, 0) = 55;
    if (!(s == expect))
        throw std::logic_error("degree_c1: expansion differs from 1+7x+25x^2+55x^3");
    const Rat d = s.at(3, 0);
    return d.get_num();
}

Int degree_c2() {
    const TruncatedSeries one = TruncatedSeries::constant(1);
    const TruncatedSeries x = TruncatedSeries::x(), y = TruncatedSeries::y();
    const TruncatedSeries two = TruncatedSeries::constant(2);

    const TruncatedSeries s_line = (one + y - two * x).inverse();
    const TruncatedSeries s_end = (one - two * y).pow(4) * (one - y).pow(17).inverse();
    const TruncatedSeries c_hom = (one + x - y).pow(4) * (one + x).inverse();

    const TruncatedSeries s = s_line * s_end * c_hom;
    const TruncatedSeries s5 = s.total_degree_part(5);
    const TruncatedSeries integrand = (x + y) * s5;
    const Rat d = integrand.at(3, 3);
    if (d.get_den() != 1) throw std::logic_error("degree_c2: non-integer degree");
    return d.get_num();
}

} // namespace lie4
