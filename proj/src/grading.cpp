#include "lie4/grading.hpp"

#include <stdexcept>
#include <unordered_map>

#include "lie4/qmatrix.hpp"

namespace lie4 {

MultiDegree var_multidegree(const std::string& name) {
    // Structure constants are named a_ijk (canonical) or aijk (script form).
    std::string digits;
    if (name.size() == 5 && name.rfind("a_", 0) == 0)
        digits = name.substr(2);
    else if (name.size() == 4 && name[0] == 'a')
        digits = name.substr(1);
    else
        return {0, 0, 0, 0};
    for (char c : digits)
        if (c < '1' || c > '4') return {0, 0, 0, 0};
    MultiDegree d{0, 0, 0, 0};
    d[digits[0] - '1'] += 1;
    d[digits[1] - '1'] += 1;
    d[digits[2] - '1'] -= 1;
    return d;
}

MultiDegree monomial_multidegree(const UniversePtr& u, const Monomial& m) {
    MultiDegree d{0, 0, 0, 0};
    for (std::size_t i = 0; i < u->size(); ++i) {
        if (!m.e[i]) continue;
        MultiDegree v = var_multidegree(u->name(i));
        for (int k = 0; k < 4; ++k) d[k] += m.e[i] * v[k];
    }
    return d;
}

std::optional<MultiDegree> multidegree(const Polynomial& f) {
    if (f.is_zero()) return MultiDegree{0, 0, 0, 0};
    const UniversePtr& u = f.universe();
    MultiDegree d = monomial_multidegree(u, f.terms().front().m);
    for (const Term& t : f.terms())
        if (monomial_multidegree(u, t.m) != d) return std::nullopt;
    return d;
}

namespace {

void enumerate(const UniversePtr& u, std::size_t var, int remaining, Monomial& m,
               std::map<MultiDegree, std::vector<Monomial>>& out) {
    if (var + 1 == u->size()) {
        m.e[var] = static_cast<std::uint8_t>(remaining);
        m.deg = 0;
        for (std::size_t i = 0; i < u->size(); ++i) m.deg += m.e[i];
        out[monomial_multidegree(u, m)].push_back(m);
        m.e[var] = 0;
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        m.e[var] = static_cast<std::uint8_t>(k);
        enumerate(u, var + 1, remaining - k, m, out);
    }
    m.e[var] = 0;
}

} // namespace

std::map<MultiDegree, std::vector<Monomial>> degree_buckets(const UniversePtr& u,
                                                            int d) {
    std::map<MultiDegree, std::vector<Monomial>> out;
    Monomial m;
    if (u->size() == 0) {
        if (d == 0) out[{0, 0, 0, 0}].push_back(m);
        return out;
    }
    enumerate(u, 0, d, m, out);
    const std::size_t n = u->size();
    for (auto& [k, v] : out)
        std::sort(v.begin(), v.end(), [n](const Monomial& a, const Monomial& b) {
            return compare(MonomialOrder::grevlex(), a, b, n) > 0;
        });
    return out;
}

std::size_t graded_rank(const std::vector<Polynomial>& polys) {
    // Bucket key: (total degree, multidegree).
    std::map<std::pair<int, MultiDegree>, std::vector<const Polynomial*>> groups;
    for (const Polynomial& p : polys) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous())
            throw std::invalid_argument("graded_rank: inhomogeneous input");
        auto md = multidegree(p);
        if (!md) throw std::invalid_argument("graded_rank: not multigraded");
        groups[{p.total_degree(), *md}].push_back(&p);
    }
    std::size_t total = 0;
    for (auto& [key, group] : groups) {
        std::unordered_map<Monomial, std::size_t, MonomialHash> col;
        for (const Polynomial* p : group)
            for (const Term& t : p->terms())
                col.emplace(t.m, col.size());
        QMatrix m(group.size(), col.size());
        for (std::size_t i = 0; i < group.size(); ++i)
            for (const Term& t : group[i]->terms()) m.at(i, col[t.m]) = t.c;
        total += rank(m);
    }
    return total;
}

std::size_t graded_intersection_dim(const std::vector<Polynomial>& a,
                                    const std::vector<Polynomial>& b) {
    std::vector<Polynomial> all = a;
    all.insert(all.end(), b.begin(), b.end());
    return graded_rank(a) + graded_rank(b) - graded_rank(all);
}

} // namespace lie4
