#ifndef LIE4_QMATRIX_HPP
#define LIE4_QMATRIX_HPP

#include <cstddef>
#include <vector>

#include "lie4/rat.hpp"

namespace lie4 {

// Dense matrix over Q, row-major. Elimination is fraction-free (Bareiss)
// internally; results are reduced rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const QMatrix& o) const = default;

    QMatrix operator*(const QMatrix& o) const;
    QMatrix transposed() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

struct RrefResult {
    QMatrix R;                       // reduced row echelon form
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns; // strictly increasing
};

RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

// Basis of {v : Mv = 0}; each vector normalized so its first nonzero entry
// is 1. Size = cols - rank. Ordered by free column index.
std::vector<std::vector<Rat>> nullspace(const QMatrix& m);

} // namespace lie4

#endif
