#include "lie4/structure.hpp"

#include <memory>
#include <stdexcept>
#include <tuple>

namespace lie4 {

const std::array<std::pair<int, int>, 6> kColumnPairs = {
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

namespace {

int column_of(int i, int j) {
    for (int c = 0; c < 6; ++c)
        if (kColumnPairs[c].first == i && kColumnPairs[c].second == j) return c;
    throw std::invalid_argument("column_of: bad pair");
}

} // namespace

UniversePtr structure_universe() {
    static UniversePtr u = [] {
        std::vector<std::string> names;
        for (int k = 1; k <= 4; ++k)
            for (const auto& [i, j] : kColumnPairs)
                names.push_back("a_" + std::to_string(i) + std::to_string(j) +
                                std::to_string(k));
        return make_universe(std::move(names));
    }();
    return u;
}

UniversePtr chart_universe(int component) {
    static std::array<UniversePtr, 5> cache;
    if (component < 1 || component > 4)
        throw std::invalid_argument("chart_universe: component must be 1..4");
    if (!cache[component]) {
        std::vector<std::string> names;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                names.push_back("g_" + std::to_string(i) + std::to_string(j));
        if (component == 2) names.push_back("x");
        if (component == 3) {
            names.push_back("x");
            names.push_back("y");
        }
        cache[component] = make_universe(std::move(names));
    }
    return cache[component];
}

UniversePtr c2_param_universe() {
    static UniversePtr u = [] {
        std::vector<std::string> names;
        for (int i = 1; i <= 5; ++i) names.push_back("f" + std::to_string(i));
        for (int i = 1; i <= 6; ++i) names.push_back("k" + std::to_string(i));
        names.push_back("m");
        return make_universe(std::move(names));
    }();
    return u;
}

std::size_t structure_var_index(int i, int j, int k) {
    return static_cast<std::size_t>((k - 1) * 6 + column_of(i, j));
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, UniversePtr u)
    : rows_(rows), cols_(cols), u_(std::move(u)),
      e_(rows * cols, Polynomial(u_)) {}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch");
    PolyMatrix r(rows_, o.cols_, u_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Polynomial& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix r(cols_, rows_, u_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Polynomial PolyMatrix::trace() const {
    Polynomial t(u_);
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

namespace {

Polynomial det_rec(const PolyMatrix& m, std::vector<std::size_t>& rows,
                   std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    Polynomial d(m.universe());
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t c = 0; c < n; ++c) {
        const Polynomial& a = m.at(rows[0], cols[c]);
        if (a.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t k = 0; k < n; ++k)
            if (k != c) sub_cols.push_back(cols[k]);
        Polynomial minor = det_rec(m, sub_rows, sub_cols);
        if (c % 2 == 0)
            d += a * minor;
        else
            d -= a * minor;
    }
    return d;
}

Polynomial submatrix_det(const PolyMatrix& m, std::vector<std::size_t> rows,
                         std::vector<std::size_t> cols) {
    return det_rec(m, rows, cols);
}

} // namespace

Polynomial PolyMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: not square");
    std::vector<std::size_t> idx(rows_);
    for (std::size_t i = 0; i < rows_; ++i) idx[i] = i;
    return submatrix_det(*this, idx, idx);
}

PolyMatrix PolyMatrix::adjugate() const {
    if (rows_ != cols_) throw std::invalid_argument("adjugate: not square");
    PolyMatrix r(rows_, cols_, u_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            std::vector<std::size_t> rs, cs;
            for (std::size_t k = 0; k < rows_; ++k)
                if (k != i) rs.push_back(k);
            for (std::size_t k = 0; k < cols_; ++k)
                if (k != j) cs.push_back(k);
            Polynomial minor = submatrix_det(*this, rs, cs);
            r.at(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
        }
    return r;
}

bool PolyMatrix::is_constant() const {
    for (const Polynomial& p : e_)
        if (!p.is_constant()) return false;
    return true;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

PolyMatrix wedge2(const PolyMatrix& g) {
    if (g.rows() != 4 || g.cols() != 4)
        throw std::invalid_argument("wedge2: expected 4x4");
    PolyMatrix w(6, 6, g.universe());
    for (int r = 0; r < 6; ++r) {
        const auto [i, j] = kColumnPairs[r];
        for (int c = 0; c < 6; ++c) {
            const auto [k, l] = kColumnPairs[c];
            w.at(r, c) = g.at(i - 1, k - 1) * g.at(j - 1, l - 1) -
                         g.at(i - 1, l - 1) * g.at(j - 1, k - 1);
        }
    }
    return w;
}

StructureTensor::StructureTensor(UniversePtr u)
    : u_(std::move(u)), e_(24, Polynomial(u_)) {}

StructureTensor StructureTensor::generic() {
    StructureTensor t(structure_universe());
    for (std::size_t v = 0; v < 24; ++v)
        t.e_[v] = Polynomial::variable(t.u_, v);
    return t;
}

Polynomial StructureTensor::bracket(int i, int j, int k) const {
    if (i < 1 || i > 4 || j < 1 || j > 4 || k < 1 || k > 4)
        throw std::invalid_argument("bracket: indices must be 1..4");
    if (i == j) return Polynomial(u_);
    if (i < j) return at(k - 1, column_of(i, j));
    return -at(k - 1, column_of(j, i));
}

PolyMatrix StructureTensor::as_matrix() const {
    PolyMatrix m(4, 6, u_);
    for (int k = 0; k < 4; ++k)
        for (int c = 0; c < 6; ++c) m.at(k, c) = at(k, c);
    return m;
}

GroupElement::GroupElement(PolyMatrix m) : g(std::move(m)), det_g(g.det()) {
    if (g.rows() != 4 || g.cols() != 4)
        throw std::invalid_argument("GroupElement: expected 4x4");
}

StructureTensor act(const GroupElement& g, const StructureTensor& A) {
    if (!same_universe(g.g.universe(), A.universe()))
        throw std::invalid_argument("act: universes differ");
    const bool constant = g.g.is_constant();
    if (constant && g.det_g.is_zero())
        throw std::invalid_argument("act: singular group element");
    PolyMatrix m = g.g.adjugate() * A.as_matrix() * wedge2(g.g);
    StructureTensor r(A.universe());
    Rat inv_det(1);
    if (constant) inv_det = Rat(1) / g.det_g.coeff(Monomial::one());
    for (int k = 0; k < 4; ++k)
        for (int c = 0; c < 6; ++c)
            r.at(k, c) = constant ? m.at(k, c) * inv_det : m.at(k, c);
    return r;
}

const PolyMatrix& jacobi_theta() {
    static const PolyMatrix theta = [] {
        const StructureTensor A = StructureTensor::generic();
        const UniversePtr u = A.universe();
        // Triples and row signs (+123, -124, +134, -234); columns list the
        // coefficients of e_4, e_3, e_2, e_1.
        const std::array<std::array<int, 3>, 4> triples = {
            {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
        const std::array<int, 4> sign = {1, -1, 1, -1};
        PolyMatrix th(4, 4, u);
        for (int r = 0; r < 4; ++r) {
            const auto [i, j, k] = std::tuple{triples[r][0], triples[r][1], triples[r][2]};
            for (int c = 0; c < 4; ++c) {
                const int t = 4 - c; // basis index carried by this column
                Polynomial coeff(u);
                for (int m = 1; m <= 4; ++m) {
                    coeff += A.bracket(j, k, m) * A.bracket(i, m, t);
                    coeff += A.bracket(k, i, m) * A.bracket(j, m, t);
                    coeff += A.bracket(i, j, m) * A.bracket(k, m, t);
                }
                th.at(r, c) = sign[r] == 1 ? coeff : -coeff;
            }
        }
        return th;
    }();
    return theta;
}

std::vector<Polynomial> jacobi_quadrics() {
    const PolyMatrix& th = jacobi_theta();
    std::vector<Polynomial> qs;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) qs.push_back(th.at(r, c));
    return qs;
}

std::pair<std::vector<Polynomial>, std::vector<Polynomial>> theta_split() {
    const PolyMatrix& th = jacobi_theta();
    std::vector<Polynomial> sym, skew;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) sym.push_back(th.at(i, j) + th.at(j, i));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) skew.push_back(th.at(i, j) - th.at(j, i));
    return {std::move(sym), std::move(skew)};
}

PolyMatrix adjoint(int i) {
    if (i < 1 || i > 4) throw std::invalid_argument("adjoint: index must be 1..4");
    const StructureTensor A = StructureTensor::generic();
    PolyMatrix m(4, 4, A.universe());
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) m.at(j - 1, k - 1) = A.bracket(i, j, k);
    return m;
}

std::array<Polynomial, 4> trace_forms() {
    return {adjoint(1).trace(), adjoint(2).trace(), adjoint(3).trace(),
            adjoint(4).trace()};
}

StructureTensor base_tensor(int component) {
    const UniversePtr u = chart_universe(component);
    StructureTensor t(u);
    auto c = [&](int v) { return Polynomial::constant(u, Rat(v)); };
    switch (component) {
    case 1:
        t.at(1, 0) = c(1);  // a_122
        t.at(1, 4) = c(-2); // a_242
        t.at(2, 1) = c(-1); // a_133
        t.at(2, 5) = c(2);  // a_343
        t.at(3, 3) = c(1);  // a_234
        break;
    case 2:
        t.at(1, 0) = c(2); // a_122
        t.at(1, 5) = c(1); // a_342
        t.at(2, 1) = c(1); // a_133
        t.at(2, 2) = c(1); // a_143
        t.at(3, 1) = Polynomial::variable(u, *u->index_of("x")); // a_134
        t.at(3, 2) = c(1); // a_144
        break;
    case 3:
        t.at(1, 0) = c(1); // a_122
        t.at(2, 1) = Polynomial::variable(u, *u->index_of("x")); // a_133
        t.at(3, 2) = Polynomial::variable(u, *u->index_of("y")); // a_144
        break;
    case 4:
        t.at(0, 0) = c(1); // a_121
        t.at(3, 5) = c(1); // a_344
        break;
    default:
        throw std::invalid_argument("base_tensor: component must be 1..4");
    }
    return t;
}

const StructureTensor& component_chart(int component) {
    static std::array<std::unique_ptr<StructureTensor>, 5> cache;
    if (component < 1 || component > 4)
        throw std::invalid_argument("component_chart: component must be 1..4");
    if (!cache[component]) {
        const UniversePtr u = chart_universe(component);
        PolyMatrix g(4, 4, u);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                g.at(i - 1, j - 1) = Polynomial::variable(
                    u, *u->index_of("g_" + std::to_string(i) + std::to_string(j)));
        cache[component] = std::make_unique<StructureTensor>(
            act(GroupElement(std::move(g)), base_tensor(component)));
    }
    return *cache[component];
}

const StructureTensor& c2_birational() {
    static const StructureTensor chart = [] {
        const UniversePtr u = c2_param_universe();
        auto v = [&](const std::string& n) {
            return Polynomial::variable(u, *u->index_of(n));
        };
        auto c = [&](int k) { return Polynomial::constant(u, Rat(k)); };

        PolyMatrix g(4, 4, u);
        for (int i = 0; i < 4; ++i) g.at(i, i) = c(1);
        g.at(0, 1) = v("f1");
        g.at(0, 2) = v("f2");
        g.at(0, 3) = v("f3");
        g.at(1, 3) = v("f4");
        g.at(2, 3) = v("f5");

        StructureTensor B(u);
        B.at(1, 0) = v("k1");
        B.at(1, 1) = v("k2");
        B.at(2, 0) = v("k3");
        B.at(2, 1) = v("k4");
        B.at(3, 0) = v("k5");
        B.at(3, 1) = v("k6");
        B.at(3, 2) = v("k1") + v("k4");
        B.at(3, 3) = v("m");

        // det(g) = 1, so the adjugate convention gives the exact action here.
        return act(GroupElement(std::move(g)), B);
    }();
    return chart;
}

std::vector<Polynomial> derived_minors(int size) {
    if (size != 3 && size != 4)
        throw std::invalid_argument("derived_minors: size must be 3 or 4");
    const PolyMatrix A = StructureTensor::generic().as_matrix();
    std::vector<std::vector<std::size_t>> row_sets, col_sets;
    std::vector<std::size_t> cur;
    auto gen = [&](auto&& self, std::size_t from, std::size_t total, std::size_t want,
                   std::vector<std::vector<std::size_t>>& out) -> void {
        if (cur.size() == want) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < total; ++i) {
            cur.push_back(i);
            self(self, i + 1, total, want, out);
            cur.pop_back();
        }
    };
    gen(gen, 0, 4, static_cast<std::size_t>(size), row_sets);
    gen(gen, 0, 6, static_cast<std::size_t>(size), col_sets);

    std::vector<Polynomial> minors;
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets)
            minors.push_back(submatrix_det(A, rs, cs));
    return minors;
}

std::vector<Polynomial> second_derived_cubics() {
    const PolyMatrix A = StructureTensor::generic().as_matrix();
    // wedge2 of the 4x6 matrix: rows by basis pairs, columns by pairs of
    // the six column labels.
    std::vector<std::pair<int, int>> col_pairs;
    for (int c = 0; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) col_pairs.emplace_back(c, d);
    PolyMatrix w2(6, 15, A.universe());
    for (int r = 0; r < 6; ++r) {
        const auto [i, j] = kColumnPairs[r];
        for (std::size_t p = 0; p < col_pairs.size(); ++p) {
            const auto [c, d] = col_pairs[p];
            w2.at(r, p) = A.at(i - 1, c) * A.at(j - 1, d) -
                          A.at(i - 1, d) * A.at(j - 1, c);
        }
    }
    PolyMatrix prod = A * w2;
    std::vector<Polynomial> cubics;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 15; ++j) cubics.push_back(prod.at(i, j));
    return cubics;
}

std::map<std::string, Polynomial> highest_weight_vectors() {
    const UniversePtr u = structure_universe();
    std::map<std::string, Polynomial> hw;

    // Explicit 21-monomial cubic generating one embedding of the degree-3
    // module that vanishes on both C_1 and C_2. Scaled by 3/8 so that
    // g3000 - f3000 lies in the ideal of the four trace forms; a highest
    // weight vector is only determined up to a scalar, and the integer-
    // primitive display normalization breaks that identity.
    hw["f3000"] = parse_polynomial(u,
        "a_122^3 - a_122^2*a_133 - a_122^2*a_144 + 4*a_122*a_123*a_132"
        " + 4*a_122*a_124*a_142 - a_122*a_133^2 + 2*a_122*a_133*a_144"
        " - 4*a_122*a_134*a_143 - a_122*a_144^2 + 4*a_123*a_132*a_133"
        " - 4*a_123*a_132*a_144 + 8*a_123*a_134*a_142 + 8*a_124*a_132*a_143"
        " - 4*a_124*a_133*a_142 + 4*a_124*a_142*a_144 + a_133^3"
        " - a_133^2*a_144 + 4*a_133*a_134*a_143 - a_133*a_144^2"
        " + 4*a_134*a_143*a_144 + a_144^3") * make_rat(3, 8);

    const PolyMatrix ad1 = adjoint(1), ad2 = adjoint(2), ad3 = adjoint(3);
    hw["g3000"] = (ad1 * ad1 * ad1).trace();
    hw["hw_2100"] = (ad1 * ad2 * ad3).trace() - (ad2 * ad1 * ad3).trace();
    hw["hw_1110"] =
        ad1.trace() * (ad1 * ad2).trace() - ad2.trace() * (ad1 * ad1).trace();
    hw["c3_quadric"] =
        parse_polynomial(u, "a_124*a_344 - a_134*a_244 + a_144*a_234");

    const PolyMatrix A = StructureTensor::generic().as_matrix();
    hw["c4_minor"] = submatrix_det(A, {1, 2, 3}, {0, 1, 2});
    return hw;
}

} // namespace lie4
