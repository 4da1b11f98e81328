#include "lie4/hilbert.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lie4 {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

namespace {

// C(n + shift, k) evaluated as a polynomial in n (valid at negative n).
Rat binomial_poly(long n, long shift, long k) {
    if (k < 0) return Rat(0);
    Rat num(1);
    for (long t = 0; t < k; ++t) num *= Rat(n + shift - t);
    Int fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
    return num / Rat(fact);
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

std::vector<Int> poly_add(std::vector<Int> a, const std::vector<Int>& b,
                          std::size_t b_shift) {
    if (a.size() < b.size() + b_shift) a.resize(b.size() + b_shift, Int(0));
    for (std::size_t j = 0; j < b.size(); ++j) a[j + b_shift] += b[j];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

// remove generators divisible by another generator
void minimalize(std::vector<Monomial>& gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.deg != b.deg) return a.deg < b.deg;
        return std::memcmp(a.e.data(), b.e.data(), kMaxVars) < 0;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const Monomial& m : gens) {
        bool divisible = false;
        for (const Monomial& g : out)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    gens = std::move(out);
}

struct NumeratorCache {
    std::unordered_map<std::string, std::vector<Int>> memo;

    static std::string key_of(const std::vector<Monomial>& gens) {
        std::string k;
        k.reserve(gens.size() * kMaxVars);
        for (const Monomial& m : gens)
            k.append(reinterpret_cast<const char*>(m.e.data()), kMaxVars);
        return k;
    }

    std::vector<Int> compute(std::vector<Monomial> gens, int nvars) {
        minimalize(gens);
        if (gens.empty()) return {Int(1)};
        if (gens.front().deg == 0) return {Int(0)}; // contains 1

        const std::string key = key_of(gens);
        if (auto it = memo.find(key); it != memo.end()) return it->second;

        // pairwise coprime: Koszul product
        bool coprime = true;
        for (std::size_t i = 0; i < gens.size() && coprime; ++i)
            for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
                if (!gens[i].coprime(gens[j])) coprime = false;
        std::vector<Int> result;
        if (coprime) {
            result = {Int(1)};
            for (const Monomial& m : gens) {
                std::vector<Int> f(m.deg + 1, Int(0));
                f[0] = 1;
                f[m.deg] = -1;
                result = poly_mul(result, f);
            }
        } else {
            // pivot: most frequent variable
            std::array<int, kMaxVars> freq{};
            for (const Monomial& m : gens)
                for (int v = 0; v < nvars; ++v)
                    if (m.e[v]) ++freq[v];
            int pivot = 0;
            for (int v = 1; v < nvars; ++v)
                if (freq[v] > freq[pivot]) pivot = v;

            // ideal + <x>: generators free of x, plus x itself
            std::vector<Monomial> plus;
            plus.push_back(Monomial::var(pivot));
            for (const Monomial& m : gens)
                if (!m.e[pivot]) plus.push_back(m);
            // ideal : x
            std::vector<Monomial> colon;
            for (const Monomial& m : gens) {
                Monomial q = m;
                if (q.e[pivot]) {
                    --q.e[pivot];
                    --q.deg;
                }
                colon.push_back(q);
            }
            result = poly_add(compute(std::move(plus), nvars),
                              compute(std::move(colon), nvars), 1);
        }
        memo.emplace(key, result);
        return result;
    }
};

} // namespace

std::vector<Int> hilbert_numerator(const std::vector<Monomial>& lead_terms,
                                   int nvars) {
    NumeratorCache cache;
    return cache.compute(lead_terms, nvars);
}

Int hilbert_function(const std::vector<Int>& numerator, int nvars, int d) {
    if (d < 0) return 0;
    Int hf = 0;
    for (std::size_t i = 0; i < numerator.size() && static_cast<int>(i) <= d; ++i)
        hf += numerator[i] * binomial(d - static_cast<int>(i) + nvars - 1, nvars - 1);
    return hf;
}

Rat HilbertPolynomial::evaluate(long n) const {
    Rat v(0);
    for (const auto& [d, c] : coeffs) v += Rat(c) * binomial_poly(n, d, d);
    return v;
}

std::string HilbertPolynomial::to_string() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        Int a = it->second;
        const bool neg = a < 0;
        if (neg) a = -a;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (a != 1) os << a.get_str() << '*';
        os << "[P^" << it->first << ']';
    }
    return os.str();
}

HilbertPolynomial hilbert_polynomial(const IdealBasis& I) {
    if (!I.groebner_flag)
        throw std::invalid_argument("hilbert_polynomial: basis lacks groebner_flag");
    HilbertPolynomial hp;
    const int n = static_cast<int>(I.universe ? I.universe->size() : 0);

    std::vector<Monomial> lead;
    for (const Polynomial& g : I.generators) {
        if (!g.is_homogeneous())
            throw std::invalid_argument("hilbert_polynomial: ideal not homogeneous");
        if (g.is_constant() && !g.is_zero()) return hp; // <1>: zero polynomial
        lead.push_back(g.leading_term(I.order).m);
    }

    std::vector<Int> num = hilbert_numerator(lead, n);
    // strip the (1-t) factors: prefix sums while N(1) == 0
    int D = n;
    for (;;) {
        Int at1 = 0;
        for (const Int& c : num) at1 += c;
        if (at1 != 0 || num.size() <= 1) break;
        std::vector<Int> q(num.size() - 1, Int(0));
        Int acc = 0;
        for (std::size_t i = 0; i + 1 < num.size(); ++i) {
            acc += num[i];
            q[i] = acc;
        }
        num = std::move(q);
        --D;
    }
    if (D <= 0) return hp; // finite-length quotient: zero polynomial

    // P(n) = sum_i num[i] * C(n - i + D - 1, D - 1), degree D-1 in n.
    auto P = [&](long at) {
        Rat v(0);
        for (std::size_t i = 0; i < num.size(); ++i)
            v += Rat(num[i]) * binomial_poly(at, D - 1 - static_cast<long>(i), D - 1);
        return v;
    };
    // [P^d] coefficients by finite differencing: c_k = (Delta^k P)(-1).
    for (int k = 0; k <= D - 1; ++k) {
        Rat c(0);
        for (int j = 0; j <= k; ++j) {
            Rat term = Rat(binomial(k, j)) * P(-1 - j);
            c += (j % 2 == 0) ? term : -term;
        }
        if (c != 0) {
            if (c.get_den() != 1)
                throw std::logic_error("hilbert_polynomial: non-integer coefficient");
            hp.coeffs[k] = c.get_num();
        }
    }
    return hp;
}

std::pair<int, Int> dim_and_degree(const IdealBasis& I) {
    HilbertPolynomial hp = hilbert_polynomial(I);
    return {hp.dim(), hp.degree()};
}

} // namespace lie4
