#include "lie4/qmatrix.hpp"

#include <cctype>
#include <stdexcept>

namespace lie4 {

Rat rat_from_string(std::string_view s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("rat_from_string: empty input");
    Rat r;
    if (r.set_str(t, 10) != 0)
        throw std::invalid_argument("rat_from_string: bad rational '" + t + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator");
    r.canonicalize();
    return r;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: shape mismatch");
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

QMatrix QMatrix::transposed() const {
    QMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

namespace {

// Row echelon by fraction-free (Bareiss) elimination on a denominator-cleared
// copy. Returns the integer echelon matrix plus the pivot bookkeeping.
struct Echelon {
    std::vector<std::vector<Int>> rows;
    std::vector<std::size_t> pivot_columns;
};

Echelon bareiss(const QMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < nc; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j) {
            Rat v = m.at(i, j) * l;
            a[i][j] = v.get_num();
        }
    }

    Echelon ech;
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a[p][c] == 0) ++p;
        if (p == nr) continue;
        if (p != r) std::swap(a[p], a[r]);
        const Int pivot = a[r][c];
        for (std::size_t i = r + 1; i < nr; ++i) {
            const Int f = a[i][c];
            for (std::size_t j = c; j < nc; ++j) {
                Int t = a[i][j] * pivot - f * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
        }
        prev = pivot;
        ech.pivot_columns.push_back(c);
        ++r;
    }
    a.resize(r);
    ech.rows = std::move(a);
    return ech;
}

} // namespace

RrefResult rref(const QMatrix& m) {
    Echelon ech = bareiss(m);
    const std::size_t rank = ech.rows.size(), nc = m.cols();

    // Back substitution over Q on the echelon rows.
    std::vector<std::vector<Rat>> rr(rank, std::vector<Rat>(nc));
    for (std::size_t i = rank; i-- > 0;) {
        const std::size_t pc = ech.pivot_columns[i];
        std::vector<Rat> row(nc);
        for (std::size_t j = 0; j < nc; ++j) row[j] = Rat(ech.rows[i][j]);
        for (std::size_t k = i + 1; k < rank; ++k) {
            const Rat f = row[ech.pivot_columns[k]];
            if (f == 0) continue;
            for (std::size_t j = ech.pivot_columns[k]; j < nc; ++j)
                row[j] -= f * rr[k][j];
        }
        const Rat inv = row[pc];
        for (std::size_t j = pc; j < nc; ++j) row[j] /= inv;
        rr[i] = std::move(row);
    }

    RrefResult res;
    res.rank = rank;
    res.pivot_columns = std::move(ech.pivot_columns);
    res.R = QMatrix(m.rows(), nc);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < nc; ++j) res.R.at(i, j) = std::move(rr[i][j]);
    return res;
}

std::size_t rank(const QMatrix& m) { return bareiss(m).rows.size(); }

std::vector<std::vector<Rat>> nullspace(const QMatrix& m) {
    RrefResult r = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(nc);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_columns[i]] = -r.R.at(i, f);
        // Leading-entry convention: first nonzero entry scaled to 1.
        for (std::size_t j = 0; j < nc; ++j) {
            if (v[j] != 0) {
                const Rat lead = v[j];
                for (std::size_t k = j; k < nc; ++k) v[k] /= lead;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace lie4
