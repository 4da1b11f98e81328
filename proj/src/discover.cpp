#include "lie4/discover.hpp"

#include <algorithm>
#include <cstring>
#include <memory>
#include <random>
#include <set>
#include <unordered_map>

#include "lie4/structure.hpp"

namespace lie4 {

namespace {

// ---------------------------------------------------------------------
// sampling

struct Rng {
    std::mt19937_64 gen;
    Rng(std::uint64_t seed, int component) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(component)};
        gen.seed(seq);
    }
    // uniform on [lo, hi], rejection sampling for portability
    long uniform(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        for (;;) {
            std::uint64_t x = gen();
            if (x < limit) return lo + static_cast<long>(x % span);
        }
    }
};

long det4(const std::array<std::array<long, 4>, 4>& g) {
    // expansion along the first row via 3x3 minors
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return g[r0][c0] * (g[r1][c1] * g[r2][c2] - g[r1][c2] * g[r2][c1]) -
               g[r0][c1] * (g[r1][c0] * g[r2][c2] - g[r1][c2] * g[r2][c0]) +
               g[r0][c2] * (g[r1][c0] * g[r2][c1] - g[r1][c1] * g[r2][c0]);
    };
    return g[0][0] * det3(1, 2, 3, 1, 2, 3) - g[0][1] * det3(1, 2, 3, 0, 2, 3) +
           g[0][2] * det3(1, 2, 3, 0, 1, 3) - g[0][3] * det3(1, 2, 3, 0, 1, 2);
}

// adj(g) * A_i(params) * wedge2(g) over machine/big integers
std::vector<Int> chart_point(int component, const std::array<std::array<long, 4>, 4>& g,
                             long x, long y) {
    // adjugate of g
    std::array<std::array<Int, 4>, 4> adj;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int rs[3], cs[3], ri = 0, ci = 0;
            for (int k = 0; k < 4; ++k) {
                if (k != i) rs[ri++] = k;
                if (k != j) cs[ci++] = k;
            }
            long m = g[rs[0]][cs[0]] * (g[rs[1]][cs[1]] * g[rs[2]][cs[2]] -
                                        g[rs[1]][cs[2]] * g[rs[2]][cs[1]]) -
                     g[rs[0]][cs[1]] * (g[rs[1]][cs[0]] * g[rs[2]][cs[2]] -
                                        g[rs[1]][cs[2]] * g[rs[2]][cs[0]]) +
                     g[rs[0]][cs[2]] * (g[rs[1]][cs[0]] * g[rs[2]][cs[1]] -
                                        g[rs[1]][cs[1]] * g[rs[2]][cs[0]]);
            adj[j][i] = Int(((i + j) % 2 == 0) ? m : -m);
        }

    // base tensor rows (k) x columns (pairs)
    std::array<std::array<long, 6>, 4> A{};
    switch (component) {
    case 1:
        A[1][0] = 1;
        A[1][4] = -2;
        A[2][1] = -1;
        A[2][5] = 2;
        A[3][3] = 1;
        break;
    case 2:
        A[1][0] = 2;
        A[1][5] = 1;
        A[2][1] = 1;
        A[2][2] = 1;
        A[3][1] = x;
        A[3][2] = 1;
        break;
    case 3:
        A[1][0] = 1;
        A[2][1] = x;
        A[3][2] = y;
        break;
    case 4:
        A[0][0] = 1;
        A[3][5] = 1;
        break;
    default:
        throw std::invalid_argument("chart_point: component must be 1..4");
    }

    // wedge2(g)
    std::array<std::array<long, 6>, 6> w2;
    for (int r = 0; r < 6; ++r) {
        const auto [i, j] = kColumnPairs[r];
        for (int c = 0; c < 6; ++c) {
            const auto [k, l] = kColumnPairs[c];
            w2[r][c] = g[i - 1][k - 1] * g[j - 1][l - 1] -
                       g[i - 1][l - 1] * g[j - 1][k - 1];
        }
    }

    // P = A * w2 (4x6), then adj * P
    std::array<std::array<Int, 6>, 4> P;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 6; ++c) {
            Int s = 0;
            for (int m = 0; m < 6; ++m)
                if (A[r][m]) s += Int(A[r][m]) * w2[m][c];
            P[r][c] = std::move(s);
        }
    std::vector<Int> pt(24);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 6; ++c) {
            Int s = 0;
            for (int m = 0; m < 4; ++m) s += adj[r][m] * P[m][c];
            pt[r * 6 + c] = std::move(s);
        }

    // projective normalization: content 1, first nonzero positive
    Int content = 0;
    for (const Int& v : pt) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
        for (Int& v : pt) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
    for (const Int& v : pt) {
        if (v == 0) continue;
        if (v < 0)
            for (Int& w : pt) w = -w;
        break;
    }
    return pt;
}

std::vector<std::vector<Int>> sample_int_points(int component, std::size_t n,
                                                std::uint64_t seed) {
    // component 0: the union of all four components, points interleaved
    std::vector<int> comps =
        component == 0 ? std::vector<int>{1, 2, 3, 4} : std::vector<int>{component};
    std::vector<Rng> rngs;
    for (int c : comps) rngs.emplace_back(seed, c);
    std::set<std::vector<Int>> seen;
    std::vector<std::vector<Int>> pts;
    std::size_t turn = 0;
    while (pts.size() < n) {
        const std::size_t lane = turn++ % comps.size();
        Rng& rng = rngs[lane];
        std::array<std::array<long, 4>, 4> g;
        for (auto& row : g)
            for (long& v : row) v = rng.uniform(-20, 20);
        if (det4(g) == 0) {
            --turn; // retry the same lane for determinism
            continue;
        }
        long x = rng.uniform(-20, 20), y = rng.uniform(-20, 20);
        std::vector<Int> pt = chart_point(comps[lane], g, x, y);
        bool zero = true;
        for (const Int& v : pt)
            if (v != 0) zero = false;
        if (zero) continue;
        if (!seen.insert(pt).second) {
            --turn;
            continue;
        }
        pts.push_back(std::move(pt));
    }
    return pts;
}

// ---------------------------------------------------------------------
// modular nullspace with rational reconstruction; results are verified
// exactly, so the modular pass is an internal optimization only.

constexpr unsigned long kPrimes[] = {
    2305843009213693951ull, // 2^61 - 1
    2305843009213693921ull, 2305843009213693907ull, 2305843009213693723ull,
    2305843009213693693ull, 2305843009213693669ull, 2305843009213693613ull,
    2305843009213693561ull, 2305843009213693549ull, 2305843009213693487ull,
    2305843009213693421ull, 2305843009213693373ull, 2305843009213693277ull,
    2305843009213693193ull, 2305843009213693153ull, 2305843009213693133ull,
};

unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
    return static_cast<unsigned long>(
        static_cast<unsigned __int128>(a) * b % p);
}

unsigned long invmod(unsigned long a, unsigned long p) {
    long old_r = static_cast<long>(p), r = static_cast<long>(a);
    long old_s = 0, s = 1;
    while (r != 0) {
        long q = old_r / r;
        long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    long inv = old_s % static_cast<long>(p);
    if (inv < 0) inv += static_cast<long>(p);
    return static_cast<unsigned long>(inv);
}

struct ModRref {
    std::vector<std::size_t> pivots;
    std::vector<std::vector<unsigned long>> rows; // rref rows, pivot entries 1
};

ModRref rref_mod(const std::vector<std::vector<Int>>& m, std::size_t cols,
                 unsigned long p) {
    std::vector<std::vector<unsigned long>> a;
    a.reserve(m.size());
    for (const auto& row : m) {
        std::vector<unsigned long> r(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            unsigned long v = mpz_fdiv_ui(row[j].get_mpz_t(), p);
            r[j] = v;
        }
        a.push_back(std::move(r));
    }
    ModRref out;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        const unsigned long inv = invmod(a[rank][c], p);
        for (std::size_t j = c; j < cols; ++j) a[rank][j] = mulmod(a[rank][j], inv, p);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][c] == 0) continue;
            const unsigned long f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                unsigned long t = mulmod(f, a[rank][j], p);
                a[i][j] = a[i][j] >= t ? a[i][j] - t : a[i][j] + p - t;
            }
        }
        out.pivots.push_back(c);
        ++rank;
    }
    a.resize(rank);
    out.rows = std::move(a);
    return out;
}

// p/q = r (mod M) with |p|, q <= sqrt(M/2); false when none exists.
bool rat_reconstruct(const Int& r, const Int& M, Rat& out) {
    Int bound;
    mpz_sqrt(bound.get_mpz_t(), Int(M / 2).get_mpz_t());
    Int r0 = M, r1 = r % M;
    if (r1 < 0) r1 += M;
    Int s0 = 0, s1 = 1;
    while (r1 > bound) {
        Int q = r0 / r1;
        Int tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    if (s1 == 0) return false;
    Int num = r1, den = s1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return false;
    out = make_rat(num, den);
    return true;
}

// Exact nullspace of an integer matrix (rows x cols), vectors normalized to
// leading entry 1 in column order. Modular with exact verification.
std::vector<std::vector<Rat>> nullspace_exact(const std::vector<std::vector<Int>>& m,
                                              std::size_t cols) {
    if (m.empty()) {
        std::vector<std::vector<Rat>> basis;
        for (std::size_t f = 0; f < cols; ++f) {
            std::vector<Rat> v(cols, Rat(0));
            v[f] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }

    std::size_t nprimes = 1;
    while (nprimes <= std::size(kPrimes)) {
        // rref for each prime; keep those attaining the maximal rank with
        // identical pivot sets
        std::vector<ModRref> rrefs;
        for (std::size_t i = 0; i < nprimes; ++i) rrefs.push_back(rref_mod(m, cols, kPrimes[i]));
        std::size_t best = 0;
        for (std::size_t i = 1; i < nprimes; ++i)
            if (rrefs[i].pivots.size() > rrefs[best].pivots.size()) best = i;
        std::vector<std::size_t> used;
        for (std::size_t i = 0; i < nprimes; ++i)
            if (rrefs[i].pivots == rrefs[best].pivots) used.push_back(i);

        const auto& pivots = rrefs[best].pivots;
        const std::size_t rank = pivots.size();

        // CRT combine used rrefs, then rationally reconstruct
        Int M = 1;
        for (std::size_t i : used) M *= Int(kPrimes[i]);
        bool ok = true;
        std::vector<std::vector<Rat>> R(rank, std::vector<Rat>(cols, Rat(0)));
        for (std::size_t r = 0; r < rank && ok; ++r) {
            for (std::size_t c = 0; c < cols && ok; ++c) {
                Int acc = 0, Mi = 1;
                // incremental CRT
                for (std::size_t t = 0; t < used.size(); ++t) {
                    const unsigned long p = kPrimes[used[t]];
                    const unsigned long v = rrefs[used[t]].rows[r][c];
                    if (t == 0) {
                        acc = Int(v);
                        Mi = Int(p);
                    } else {
                        Int diff = (Int(v) - acc) % Int(p);
                        if (diff < 0) diff += Int(p);
                        Int inv;
                        Int mi_mod = Mi % Int(p);
                        mpz_invert(inv.get_mpz_t(), mi_mod.get_mpz_t(), Int(p).get_mpz_t());
                        acc += Mi * ((diff * inv) % Int(p));
                        Mi *= Int(p);
                    }
                }
                if (!rat_reconstruct(acc, M, R[r][c])) ok = false;
            }
        }

        if (ok) {
            // nullspace from reconstructed rref
            std::vector<bool> is_pivot(cols, false);
            for (std::size_t c : pivots) is_pivot[c] = true;
            std::vector<std::vector<Rat>> basis;
            for (std::size_t f = 0; f < cols; ++f) {
                if (is_pivot[f]) continue;
                std::vector<Rat> v(cols, Rat(0));
                v[f] = 1;
                for (std::size_t r = 0; r < rank; ++r) v[pivots[r]] = -R[r][f];
                for (std::size_t j = 0; j < cols; ++j) {
                    if (v[j] != 0) {
                        const Rat lead = v[j];
                        for (std::size_t k = j; k < cols; ++k) v[k] /= lead;
                        break;
                    }
                }
                basis.push_back(std::move(v));
            }
            // exact verification: M v = 0 for every vector. Combined with
            // nullity_p >= nullity this proves the basis is exact.
            bool verified = true;
            for (const auto& v : basis) {
                Int den = 1;
                for (const Rat& x : v)
                    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
                std::vector<Int> iv(cols);
                for (std::size_t j = 0; j < cols; ++j) {
                    Rat s = v[j] * den;
                    iv[j] = s.get_num();
                }
                for (const auto& row : m) {
                    Int dot = 0;
                    for (std::size_t j = 0; j < cols; ++j)
                        if (iv[j] != 0) dot += row[j] * iv[j];
                    if (dot != 0) {
                        verified = false;
                        break;
                    }
                }
                if (!verified) break;
            }
            if (verified) return basis;
        }
        ++nprimes;
    }
    throw std::logic_error("nullspace_exact: reconstruction failed with all primes");
}

// ---------------------------------------------------------------------
// symbolic certification

struct IntTerms {
    std::vector<Monomial> m;
    std::vector<Int> c;
    void push(const Monomial& mm, Int cc) {
        m.push_back(mm);
        c.push_back(std::move(cc));
    }
    std::size_t size() const { return m.size(); }
};

// open-addressing accumulator for monomial -> integer sums
class FlatAcc {
public:
    explicit FlatAcc(std::size_t expect) {
        std::size_t cap = 64;
        while (cap < expect * 2) cap <<= 1;
        slots_.resize(cap);
    }

    void add(const Monomial& m, const Int& delta) {
        if (count_ * 5 > slots_.size() * 3) grow();
        std::size_t i = MonomialHash{}(m) & (slots_.size() - 1);
        for (;;) {
            Slot& s = slots_[i];
            if (!s.used) {
                s.used = true;
                s.m = m;
                s.c = delta;
                ++count_;
                return;
            }
            if (s.m == m) {
                s.c += delta;
                return;
            }
            i = (i + 1) & (slots_.size() - 1);
        }
    }

    bool all_zero() const {
        for (const Slot& s : slots_)
            if (s.used && s.c != 0) return false;
        return true;
    }

    IntTerms extract() const {
        IntTerms t;
        for (const Slot& s : slots_)
            if (s.used && s.c != 0) t.push(s.m, s.c);
        return t;
    }

private:
    struct Slot {
        Monomial m;
        Int c;
        bool used = false;
    };
    std::vector<Slot> slots_;
    std::size_t count_ = 0;

    void grow() {
        std::vector<Slot> old = std::move(slots_);
        slots_.assign(old.size() * 2, Slot{});
        count_ = 0;
        for (Slot& s : old)
            if (s.used && s.c != 0) add(s.m, s.c);
    }
};

class Certifier {
public:
    explicit Certifier(int component) : component_(component) {
        // Component 2 is certified against its dense 12-parameter chart;
        // the others against the full symbolic group chart. Chart entries
        // have integer coefficients and are used exactly as constructed.
        const StructureTensor& chart =
            component == 2 ? c2_birational() : component_chart(component);
        for (int k = 0; k < 4; ++k)
            for (int c = 0; c < 6; ++c)
                images_[k * 6 + c] = to_int_terms(chart.at(k, c));
    }

    bool is_zero(const Polynomial& f) {
        const Polynomial fp = f.primitive_part();
        FlatAcc acc(1 << 12);
        for (const Term& t : fp.terms()) {
            if (t.m.deg > 4) throw std::invalid_argument("certify: degree above 4");
            std::array<int, 4> vars;
            int nv = 0;
            for (std::size_t v = 0; v < 24; ++v)
                for (int k = 0; k < t.m.e[v]; ++k) vars[nv++] = static_cast<int>(v);
            const Int c = t.c.get_num();
            switch (nv) {
            case 0:
                acc.add(Monomial::one(), c);
                break;
            case 1:
                add_scaled(acc, images_[vars[0]], c);
                break;
            case 2:
                add_scaled(acc, pair_image(vars[0], vars[1]), c);
                break;
            case 3:
                fuse(acc, pair_image(vars[0], vars[1]), images_[vars[2]], c);
                break;
            case 4: {
                // staged product keeps the intermediate collected; fusing
                // two pair images squares the term count instead
                FlatAcc tmp(1 << 12);
                fuse(tmp, pair_image(vars[0], vars[1]), images_[vars[2]], Int(1));
                fuse(acc, tmp.extract(), images_[vars[3]], c);
                break;
            }
            default:
                throw std::invalid_argument("certify: degree above 4");
            }
        }
        return acc.all_zero();
    }

private:
    int component_;
    std::array<IntTerms, 24> images_;
    std::map<std::pair<int, int>, IntTerms> pairs_;

    static IntTerms to_int_terms(const Polynomial& p) {
        IntTerms t;
        for (const Term& x : p.terms()) {
            if (x.c.get_den() != 1)
                throw std::logic_error("certify: chart entry not integral");
            t.push(x.m, x.c.get_num());
        }
        return t;
    }

    const IntTerms& pair_image(int a, int b) {
        if (a > b) std::swap(a, b);
        auto it = pairs_.find({a, b});
        if (it != pairs_.end()) return it->second;
        FlatAcc acc(images_[a].size() * images_[b].size());
        fuse(acc, images_[a], images_[b], Int(1));
        return pairs_.emplace(std::make_pair(a, b), acc.extract()).first->second;
    }

    static void add_scaled(FlatAcc& acc, const IntTerms& t, const Int& c) {
        for (std::size_t i = 0; i < t.size(); ++i) acc.add(t.m[i], t.c[i] * c);
    }

    static void fuse(FlatAcc& acc, const IntTerms& a, const IntTerms& b, const Int& c) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Int ac = a.c[i] * c;
            for (std::size_t j = 0; j < b.size(); ++j)
                acc.add(a.m[i] * b.m[j], ac * b.c[j]);
        }
    }
};

Certifier& certifier_for(int component) {
    static std::array<std::unique_ptr<Certifier>, 5> cache;
    if (component < 1 || component > 4)
        throw std::invalid_argument("certifier: component must be 1..4");
    if (!cache[component]) cache[component] = std::make_unique<Certifier>(component);
    return *cache[component];
}

// component 0 = the union: zero on every component
bool certified_zero(int component, const Polynomial& f) {
    if (component == 0) {
        for (int c = 4; c >= 1; --c) // cheapest charts first
            if (!certifier_for(c).is_zero(f)) return false;
        return true;
    }
    return certifier_for(component).is_zero(f);
}

// ---------------------------------------------------------------------
// vanishing-space pipeline

struct BucketSpace {
    std::vector<Monomial> monomials; // descending grevlex
    std::vector<std::vector<Rat>> basis;
    std::size_t new_count = 0;
};

struct Stage {
    std::map<MultiDegree, BucketSpace> buckets;
};

// reduce v against rows; returns true (and appends v, scaled to pivot 1)
// when v extends the span
struct RatEchelon {
    std::vector<std::vector<Rat>> rows;
    std::vector<std::size_t> pivots;

    bool insert(std::vector<Rat> v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            const Rat f = v[pivots[r]];
            for (std::size_t j = 0; j < v.size(); ++j)
                if (rows[r][j] != 0) v[j] -= f * rows[r][j];
        }
        std::size_t p = v.size();
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0) {
                p = j;
                break;
            }
        if (p == v.size()) return false;
        const Rat lead = v[p];
        for (std::size_t j = p; j < v.size(); ++j) v[j] /= lead;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

Polynomial bucket_poly(const UniversePtr& u, const BucketSpace& b,
                       const std::vector<Rat>& v) {
    std::vector<Term> ts;
    for (std::size_t j = 0; j < b.monomials.size(); ++j)
        if (v[j] != 0) ts.push_back({b.monomials[j], v[j]});
    return Polynomial(u, std::move(ts));
}

Stage compute_stage(int component, int d, std::size_t samples, std::uint64_t seed,
                    const Stage* prev, const std::optional<MultiDegree>& filter,
                    bool bucketed, bool certify,
                    std::vector<Polynomial>* new_generators) {
    const UniversePtr u = structure_universe();
    auto all_buckets = degree_buckets(u, d);

    if (samples == 0 && !bucketed) {
        // one big system: 1.5x the monomial count
        std::size_t count = 0;
        for (const auto& [md, mons] : all_buckets) count += mons.size();
        samples = (3 * count) / 2;
    }

    std::map<MultiDegree, std::vector<Monomial>> chosen;
    if (!bucketed) {
        std::vector<Monomial> all;
        for (auto& [md, mons] : all_buckets)
            all.insert(all.end(), mons.begin(), mons.end());
        const std::size_t n = u->size();
        std::sort(all.begin(), all.end(), [n](const Monomial& a, const Monomial& b) {
            return compare(MonomialOrder::grevlex(), a, b, n) > 0;
        });
        chosen[{0, 0, 0, 0}] = std::move(all);
    } else if (filter) {
        auto it = all_buckets.find(*filter);
        if (it != all_buckets.end()) chosen[it->first] = it->second;
    } else {
        chosen = std::move(all_buckets);
    }

    if (samples == 0) samples = default_sample_count(d);
    const auto points = sample_int_points(component, samples, seed);

    // per-point power tables
    std::vector<std::array<std::vector<Int>, 24>> pows(points.size());
    for (std::size_t p = 0; p < points.size(); ++p)
        for (std::size_t v = 0; v < 24; ++v) {
            auto& pw = pows[p][v];
            pw.resize(d + 1);
            pw[0] = 1;
            for (int k = 1; k <= d; ++k) pw[k] = pw[k - 1] * points[p][v];
        }

    Stage stage;
    for (auto& [md, mons] : chosen) {
        BucketSpace bs;
        bs.monomials = mons;

        std::vector<std::vector<Int>> eval(points.size(), std::vector<Int>(mons.size()));
        for (std::size_t p = 0; p < points.size(); ++p)
            for (std::size_t j = 0; j < mons.size(); ++j) {
                Int v = 1;
                for (std::size_t var = 0; var < 24; ++var)
                    if (mons[j].e[var]) v *= pows[p][var][mons[j].e[var]];
                eval[p][j] = std::move(v);
            }
        bs.basis = nullspace_exact(eval, mons.size());

        // span of R_1 * previous stage inside this bucket
        RatEchelon ech;
        std::size_t sdim = 0;
        if (prev) {
            std::unordered_map<Monomial, std::size_t, MonomialHash> index;
            for (std::size_t j = 0; j < mons.size(); ++j) index.emplace(mons[j], j);
            for (std::size_t var = 0; var < 24; ++var) {
                const Monomial xm = Monomial::var(var);
                for (const auto& [pmd, pbs] : prev->buckets) {
                    // multidegree must match: pmd + deg(var) == md
                    MultiDegree want = monomial_multidegree(u, xm);
                    bool match = true;
                    for (int k = 0; k < 4; ++k)
                        if (pmd[k] + want[k] != md[k]) match = false;
                    if (bucketed && !match) continue;
                    for (const auto& pv : pbs.basis) {
                        std::vector<Rat> w(mons.size(), Rat(0));
                        bool in_bucket = true;
                        for (std::size_t j = 0; j < pbs.monomials.size(); ++j) {
                            if (pv[j] == 0) continue;
                            auto it = index.find(pbs.monomials[j] * xm);
                            if (it == index.end()) {
                                in_bucket = false;
                                break;
                            }
                            w[it->second] = pv[j];
                        }
                        if (in_bucket && ech.insert(std::move(w))) ++sdim;
                    }
                }
            }
        }

        // nullspace vectors extending R_1 V_{d-1} are the candidate new
        // generators; they are the only ones needing direct certification.
        for (const auto& v : bs.basis) {
            if (!ech.insert(v)) continue;
            ++bs.new_count;
            Polynomial cand = bucket_poly(u, bs, v);
            if (certify && !certified_zero(component, cand))
                throw CertificationError(
                    "certification failed (component " + std::to_string(component) +
                    ", degree " + std::to_string(d) +
                    "): sampled space too large; offending candidate: " +
                    cand.to_string());
            if (new_generators) new_generators->push_back(cand.monic());
        }
        stage.buckets.emplace(md, std::move(bs));
    }
    return stage;
}

std::vector<Polynomial> stage_polys(const Stage& s) {
    const UniversePtr u = structure_universe();
    std::vector<Polynomial> out;
    for (const auto& [md, bs] : s.buckets)
        for (const auto& v : bs.basis) out.push_back(bucket_poly(u, bs, v));
    return out;
}

} // namespace

std::size_t default_sample_count(int degree) {
    static std::map<int, std::size_t> cache;
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
    std::size_t largest = 0;
    for (const auto& [md, mons] : degree_buckets(structure_universe(), degree))
        largest = std::max(largest, mons.size());
    const std::size_t n = std::max<std::size_t>(2 * largest, 8);
    cache[degree] = n;
    return n;
}

SampleSet sample(int component, std::size_t n, std::uint64_t seed) {
    if (component < 1 || component > 4)
        throw std::invalid_argument("sample: component must be 1..4");
    if (n == 0) throw std::invalid_argument("sample: need n >= 1");
    SampleSet s;
    s.component = component;
    s.seed = seed;
    for (auto& pt : sample_int_points(component, n, seed)) {
        std::vector<Rat> rp(24);
        for (int i = 0; i < 24; ++i) rp[i] = Rat(pt[i]);
        s.points.push_back(std::move(rp));
    }
    return s;
}

VanishingSpace vanishing_space(int component, int degree, std::size_t samples,
                               std::uint64_t seed,
                               const std::optional<MultiDegree>& filter,
                               bool bucketed, bool certify) {
    if (degree < 1 || degree > 4)
        throw std::invalid_argument("vanishing_space: degree must be 1..4");
    VanishingSpace vs;
    vs.component = component;
    vs.total_degree = degree;
    vs.multidegree_filter = filter;

    Stage prev, cur;
    const Stage* prev_ptr = nullptr;
    for (int d = 1; d <= degree; ++d) {
        const bool top = (d == degree);
        cur = compute_stage(component, d, top ? samples : 0, seed, prev_ptr,
                            top ? filter : std::nullopt, top ? bucketed : true,
                            certify, nullptr);
        prev = std::move(cur);
        prev_ptr = &prev;
    }
    vs.basis = stage_polys(prev);
    vs.certified = certify;
    return vs;
}

DiscoveredComponent discover_component(int component, int max_degree,
                                       std::uint64_t seed, std::size_t samples) {
    if (component < 0 || component > 4)
        throw std::invalid_argument("discover_component: component must be 0..4");
    if (max_degree < 1 || max_degree > 4)
        throw std::invalid_argument("discover_component: max_degree must be 1..4");
    DiscoveredComponent out;
    out.component = component;
    out.seed = seed;

    Stage prev;
    const Stage* prev_ptr = nullptr;
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Polynomial> new_gens;
        Stage cur = compute_stage(component, d, samples, seed, prev_ptr, std::nullopt,
                                  true, true, &new_gens);
        int count = 0;
        for (const auto& [md, bs] : cur.buckets) count += static_cast<int>(bs.new_count);
        out.profile[d] = count;
        VanishingSpace vs;
        vs.component = component;
        vs.total_degree = d;
        vs.basis = stage_polys(cur);
        vs.certified = true;
        out.spaces.push_back(std::move(vs));
        out.minimal_generators.insert(out.minimal_generators.end(), new_gens.begin(),
                                      new_gens.end());
        prev = std::move(cur);
        prev_ptr = &prev;
    }
    return out;
}

std::map<int, int> generator_profile(int component, int max_degree,
                                     std::uint64_t seed) {
    if (component < 1 || component > 4)
        throw std::invalid_argument("generator_profile: component must be 1..4");
    return discover_component(component, max_degree, seed).profile;
}

DiscoveredComponent discover_union(int max_degree, std::uint64_t seed,
                                   std::size_t samples) {
    return discover_component(0, max_degree, seed, samples);
}

bool vanishes_on_component(int component, const Polynomial& f) {
    if (!same_universe(f.universe(), structure_universe()))
        throw std::invalid_argument("vanishes_on_component: wrong universe");
    if (f.is_zero()) return true;
    if (component == 0) {
        for (int c = 4; c >= 1; --c)
            if (!vanishes_on_component(c, f)) return false;
        return true;
    }
    if (f.total_degree() > 4) {
        // direct substitution fallback for high degree
        const StructureTensor& chart =
            component == 2 ? c2_birational() : component_chart(component);
        std::vector<Polynomial> images(24);
        for (int k = 0; k < 4; ++k)
            for (int c = 0; c < 6; ++c) images[k * 6 + c] = chart.at(k, c);
        return substitute(f, images).is_zero();
    }
    return certified_zero(component, f);
}

} // namespace lie4
