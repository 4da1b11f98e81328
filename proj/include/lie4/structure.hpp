#ifndef LIE4_STRUCTURE_HPP
#define LIE4_STRUCTURE_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lie4/polynomial.hpp"

namespace lie4 {

// Column labels of the 4x6 structure-constant matrix: basis pairs
// (12, 13, 14, 23, 24, 34), 1-based.
extern const std::array<std::pair<int, int>, 6> kColumnPairs;

// The 24 coordinates a_ijk in row-major order of the 4x6 matrix:
// a_121, a_131, a_141, a_231, a_241, a_341, a_122, ..., a_344.
UniversePtr structure_universe();

// g_11..g_44 plus the family parameters the component needs
// (x for component 2, x and y for component 3).
UniversePtr chart_universe(int component);

// f1..f5, k1..k6, m.
UniversePtr c2_param_universe();

std::size_t structure_var_index(int i, int j, int k); // 1-based, i < j

// Small dense matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, UniversePtr u);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const UniversePtr& universe() const { return u_; }

    Polynomial& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix transposed() const;
    Polynomial trace() const;
    Polynomial det() const;
    PolyMatrix adjugate() const;
    bool is_constant() const;

    bool operator==(const PolyMatrix& o) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    UniversePtr u_;
    std::vector<Polynomial> e_;
};

// 6x6 matrix of the 2x2 minors of a 4x4 matrix, rows and columns labeled
// by kColumnPairs. Multiplicative: wedge2(gh) = wedge2(g) wedge2(h).
PolyMatrix wedge2(const PolyMatrix& g);

// The 4x6 matrix A with full signed tensor access (a_iik = 0,
// a_jik = -a_ijk).
class StructureTensor {
public:
    explicit StructureTensor(UniversePtr u);
    static StructureTensor generic(); // symbolic over structure_universe()

    const UniversePtr& universe() const { return u_; }
    Polynomial& at(int k, int col) { return e_[k * 6 + col]; } // 0-based
    const Polynomial& at(int k, int col) const { return e_[k * 6 + col]; }
    // Signed access, 1-based indices: coefficient of e_k in [e_i, e_j].
    Polynomial bracket(int i, int j, int k) const;

    PolyMatrix as_matrix() const;
    bool operator==(const StructureTensor& o) const { return e_ == o.e_; }

private:
    UniversePtr u_;
    std::vector<Polynomial> e_; // 24 entries, row-major
};

struct GroupElement {
    PolyMatrix g; // 4x4
    Polynomial det_g;

    explicit GroupElement(PolyMatrix m);
};

// The change-of-basis action A -> g^{-1} A wedge2(g). For a matrix of
// constants the exact inverse is used (singular g is an error); for a
// symbolic matrix the adjugate replaces the inverse, scaling the result
// by det(g), which is immaterial projectively.
StructureTensor act(const GroupElement& g, const StructureTensor& A);

// The 4x4 matrix of Jacobi quadrics. Rows carry the four Jacobi
// expressions with signs (+123, -124, +134, -234); columns are the
// coefficients of e_4, e_3, e_2, e_1 in that order.
const PolyMatrix& jacobi_theta();

// Spans of Theta + Theta^T (upper triangle, 10 entries, first is
// 2*theta_11) and Theta - Theta^T (strict upper triangle, 6 entries,
// first is theta_12 - theta_21).
std::pair<std::vector<Polynomial>, std::vector<Polynomial>> theta_split();

// All 16 entries of jacobi_theta(), row-major.
std::vector<Polynomial> jacobi_quadrics();

// Matrix of ad(e_i): entry (j,k) is the coefficient of e_k in [e_i, e_j].
PolyMatrix adjoint(int i); // i in 1..4

// Traces of ad(e_1) .. ad(e_4); the four linear forms vanishing on C_1.
std::array<Polynomial, 4> trace_forms();

// The base point A_i of component i over chart_universe(i).
StructureTensor base_tensor(int component);

// act(g, A_i(params)) with a fully symbolic g (adjugate convention).
const StructureTensor& component_chart(int component);

// The 12-parameter birational parametrization of C_2: the unipotent g and
// the structured B expanded through the action (det g = 1, so the result
// is exact). Entries are polynomials in f1..f5, k1..k6, m.
const StructureTensor& c2_birational();

// All size x size minors of the generic 4x6 matrix, row and column
// subsets enumerated lexicographically. 80 minors for size 3, 15 for 4.
std::vector<Polynomial> derived_minors(int size);

// The 60 entries of A * wedge2(A), the matrix whose column space is the
// second derived algebra. Row-major; columns indexed by lexicographic
// pairs of the six column labels.
std::vector<Polynomial> second_derived_cubics();

// Named highest weight vectors: f3000, g3000, hw_2100, hw_1110,
// c3_quadric, c4_minor.
std::map<std::string, Polynomial> highest_weight_vectors();

} // namespace lie4

#endif
