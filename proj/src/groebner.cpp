#include "lie4/groebner.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <set>

#include "lie4/hilbert.hpp"

namespace lie4 {

namespace {

using Clock = std::chrono::steady_clock;

struct ITerm {
    Monomial m;
    Int c;
};

// one bit per variable with a nonzero exponent; a divisor's mask must be a
// subset of the multiple's mask
std::uint32_t support_mask(const Monomial& m) {
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (m.e[i]) b |= (1u << i);
    return b;
}

// Integer polynomial, terms sorted descending in the engine's order,
// content 1, positive leading coefficient.
struct IntPoly {
    std::vector<ITerm> t;
    int sugar = 0;

    const Monomial& lm() const { return t.front().m; }
    const Int& lc() const { return t.front().c; }
    bool zero() const { return t.empty(); }
};

void strip_content(std::vector<ITerm>& t) {
    if (t.empty()) return;
    Int g = 0;
    for (const ITerm& x : t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.c.get_mpz_t());
        if (g == 1) break;
    }
    const bool flip = t.front().c < 0;
    if (flip) g = -g;
    if (g != 1)
        for (ITerm& x : t) mpz_divexact(x.c.get_mpz_t(), x.c.get_mpz_t(), g.get_mpz_t());
}

struct Engine {
    UniversePtr u;
    std::size_t nvars;
    MonomialOrder ord;
    GBOptions opts;
    Clock::time_point start = Clock::now();
    std::uint64_t pairs_done = 0;
    std::uint64_t work_ticks = 0;

    std::vector<IntPoly> basis;
    std::vector<char> redundant; // leading term divisible by a later one
    std::vector<std::uint32_t> lead_mask;

    struct Pair {
        int i, j;
        Monomial lcm;
        int sugar;
    };
    struct PairLess {
        const Engine* e;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            if (int c = compare(e->ord, a.lcm, b.lcm, e->nvars)) return c < 0;
            if (a.j != b.j) return a.j < b.j;
            return a.i < b.i;
        }
    };
    std::set<Pair, PairLess> pairs;

    Engine(UniversePtr uni, MonomialOrder o, GBOptions op)
        : u(std::move(uni)), nvars(u->size()), ord(o), opts(op),
          pairs(PairLess{this}) {
        weighted = !opts.weights.empty();
    }

    bool weighted = false;

    int wdeg(const Monomial& m) const {
        if (!weighted) return static_cast<int>(m.deg);
        int d = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (m.e[i]) d += opts.weights[i] * m.e[i];
        return d;
    }

    void check_budget() {
        if (pairs_done > opts.max_pairs)
            throw BudgetExceeded("groebner: pair budget exceeded");
        if (std::chrono::duration<double>(Clock::now() - start).count() >
            opts.max_seconds)
            throw BudgetExceeded("groebner: time budget exceeded");
    }
    void tick() {
        if (++work_ticks % 8192 == 0) check_budget();
    }

    int cmp(const Monomial& a, const Monomial& b) const {
        return compare(ord, a, b, nvars);
    }

    IntPoly to_int(const Polynomial& p) const {
        IntPoly r;
        Int den = 1;
        for (const Term& t : p.terms())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
        r.t.reserve(p.terms().size());
        for (const Term& t : p.terms()) {
            Rat v = t.c * den;
            r.t.push_back({t.m, v.get_num()});
        }
        std::sort(r.t.begin(), r.t.end(),
                  [this](const ITerm& a, const ITerm& b) { return cmp(a.m, b.m) > 0; });
        strip_content(r.t);
        r.sugar = 0;
        for (const ITerm& t : r.t) r.sugar = std::max(r.sugar, wdeg(t.m));
        return r;
    }

    Polynomial to_poly(const IntPoly& p) const {
        std::vector<Term> ts;
        ts.reserve(p.t.size());
        const Int& l = p.lc();
        for (const ITerm& t : p.t) ts.push_back({t.m, make_rat(t.c, l)});
        return Polynomial(u, std::move(ts));
    }

    // --- geobucket accumulator ------------------------------------------

    struct Bucket {
        Int scale = 1;
        std::vector<ITerm> t;
        std::size_t head = 0;
        std::size_t size() const { return t.size() - head; }
        bool empty() const { return head == t.size(); }
    };

    struct Geo {
        Engine* e;
        std::vector<Bucket> b;

        explicit Geo(Engine* eng) : e(eng) {}

        static std::size_t cap(std::size_t k) { return std::size_t(8) << (2 * k); }

        // dst = merge of bucket contents and extra (sorted desc), combining
        // equal monomials and dropping zeros. Bucket scale is flushed.
        void merge_into(std::size_t k, std::vector<ITerm>&& extra) {
            Bucket& bk = b[k];
            if (bk.empty()) {
                bk.t = std::move(extra);
                bk.head = 0;
                bk.scale = 1;
            } else {
                std::vector<ITerm> out;
                out.reserve(bk.size() + extra.size());
                std::size_t i = bk.head, j = 0;
                const bool flush = bk.scale != 1;
                while (i < bk.t.size() && j < extra.size()) {
                    int c = e->cmp(bk.t[i].m, extra[j].m);
                    if (c > 0) {
                        out.push_back(std::move(bk.t[i]));
                        if (flush) out.back().c *= bk.scale;
                        ++i;
                    } else if (c < 0) {
                        out.push_back(std::move(extra[j++]));
                    } else {
                        Int s = bk.t[i].c;
                        if (flush) s *= bk.scale;
                        s += extra[j].c;
                        if (s != 0) out.push_back({bk.t[i].m, std::move(s)});
                        ++i;
                        ++j;
                    }
                }
                for (; i < bk.t.size(); ++i) {
                    out.push_back(std::move(bk.t[i]));
                    if (flush) out.back().c *= bk.scale;
                }
                for (; j < extra.size(); ++j) out.push_back(std::move(extra[j]));
                bk.t = std::move(out);
                bk.head = 0;
                bk.scale = 1;
            }
            // cascade upward while over capacity
            if (bk.size() > cap(k)) {
                std::vector<ITerm> spill(std::make_move_iterator(bk.t.begin() + bk.head),
                                         std::make_move_iterator(bk.t.end()));
                if (bk.scale != 1)
                    for (ITerm& x : spill) x.c *= bk.scale;
                bk.t.clear();
                bk.head = 0;
                bk.scale = 1;
                if (k + 1 >= b.size()) b.emplace_back();
                merge_into(k + 1, std::move(spill));
            }
        }

        void add(const Int& mult, const Monomial& shift,
                 const std::vector<ITerm>& src, std::size_t skip) {
            if (src.size() <= skip) return;
            std::vector<ITerm> v;
            v.reserve(src.size() - skip);
            for (std::size_t i = skip; i < src.size(); ++i) {
                v.push_back({src[i].m * shift, src[i].c * mult});
                e->tick();
            }
            std::size_t k = 0;
            while (cap(k) < v.size()) ++k;
            while (b.size() <= k) b.emplace_back();
            merge_into(k, std::move(v));
        }

        void scale_all(const Int& s) {
            for (Bucket& bk : b)
                if (!bk.empty()) bk.scale *= s;
        }

        bool extract_lead(ITerm& out) {
            for (;;) {
                int best = -1;
                for (std::size_t k = 0; k < b.size(); ++k) {
                    if (b[k].empty()) continue;
                    if (best < 0 ||
                        e->cmp(b[k].t[b[k].head].m, b[best].t[b[best].head].m) > 0)
                        best = static_cast<int>(k);
                }
                if (best < 0) return false;
                const Monomial m = b[best].t[b[best].head].m;
                Int c = 0;
                for (Bucket& bk : b) {
                    if (bk.empty()) continue;
                    if (bk.t[bk.head].m == m) {
                        c += bk.t[bk.head].c * bk.scale;
                        ++bk.head;
                    }
                }
                if (c != 0) {
                    out = {m, std::move(c)};
                    return true;
                }
            }
        }
    };

    // --- reduction --------------------------------------------------------

    int find_reducer(const Monomial& m, int exclude = -1) const {
        const std::uint32_t mask = support_mask(m);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (redundant[i] || static_cast<int>(i) == exclude) continue;
            if (lead_mask[i] & ~mask) continue;
            const Monomial& lm = basis[i].lm();
            if (lm.deg <= m.deg && lm.divides(m)) return static_cast<int>(i);
        }
        return -1;
    }

    // Full normal form. The result is primitive with positive leading
    // coefficient, so it is defined up to the (irrelevant) pseudo-scaling.
    IntPoly normal_form(Geo& g, int seed_sugar, int exclude = -1) {
        std::vector<ITerm> out;
        std::vector<std::uint32_t> epoch;
        std::vector<Int> scales;
        int sugar = seed_sugar;
        ITerm t;
        while (g.extract_lead(t)) {
            int r = find_reducer(t.m, exclude);
            if (r < 0) {
                out.push_back(std::move(t));
                epoch.push_back(static_cast<std::uint32_t>(scales.size()));
                continue;
            }
            const IntPoly& gp = basis[r];
            const Monomial shift = t.m.divided_by(gp.lm());
            sugar = std::max(sugar, gp.sugar + wdeg(shift));
            Int d;
            mpz_gcd(d.get_mpz_t(), t.c.get_mpz_t(), gp.lc().get_mpz_t());
            Int a, bcoef;
            mpz_divexact(a.get_mpz_t(), gp.lc().get_mpz_t(), d.get_mpz_t());
            mpz_divexact(bcoef.get_mpz_t(), t.c.get_mpz_t(), d.get_mpz_t());
            if (a != 1) {
                g.scale_all(a);
                scales.push_back(a);
            }
            g.add(-bcoef, shift, gp.t, 1);
        }
        // apply suffix scale products to the settled terms
        if (!scales.empty()) {
            std::vector<Int> suffix(scales.size() + 1, Int(1));
            for (std::size_t i = scales.size(); i-- > 0;)
                suffix[i] = suffix[i + 1] * scales[i];
            for (std::size_t i = 0; i < out.size(); ++i) out[i].c *= suffix[epoch[i]];
        }
        strip_content(out);
        IntPoly r;
        r.t = std::move(out);
        r.sugar = sugar;
        return r;
    }

    IntPoly normal_form(const IntPoly& f, int exclude = -1) {
        Geo g(this);
        g.add(1, Monomial::one(), f.t, 0);
        return normal_form(g, f.sugar, exclude);
    }

    // --- pair management (Gebauer-Moeller) --------------------------------

    void add_basis_element(IntPoly h) {
        const int t = static_cast<int>(basis.size());
        const Monomial& lmt = h.lm();

        // B criterion: discard old pairs whose lcm is a proper multiple
        // of the new leading term.
        for (auto it = pairs.begin(); it != pairs.end();) {
            if (lmt.divides(it->lcm) &&
                !(Monomial::lcm(basis[it->i].lm(), lmt) == it->lcm) &&
                !(Monomial::lcm(basis[it->j].lm(), lmt) == it->lcm))
                it = pairs.erase(it);
            else
                ++it;
        }

        struct Cand {
            int i;
            Monomial lcm;
            bool alive = true;
        };
        std::vector<Cand> cand;
        for (int i = 0; i < t; ++i) {
            if (redundant[i]) continue;
            cand.push_back({i, Monomial::lcm(basis[i].lm(), lmt)});
        }
        // M criterion: keep only minimal lcms.
        for (auto& a : cand)
            for (const auto& b : cand) {
                if (!a.alive) break;
                if (a.i != b.i && b.alive && !(b.lcm == a.lcm) && b.lcm.divides(a.lcm))
                    a.alive = false;
            }
        // F criterion: one pair per lcm value, preferring a coprime pair
        // (which the product criterion then removes along with its class).
        for (auto& a : cand) {
            if (!a.alive) continue;
            bool class_coprime = basis[a.i].lm().coprime(lmt);
            for (auto& b : cand) {
                if (b.i == a.i || !b.alive || !(b.lcm == a.lcm)) continue;
                if (basis[b.i].lm().coprime(lmt)) class_coprime = true;
                b.alive = false;
            }
            if (class_coprime) a.alive = false;
        }

        for (const auto& c : cand) {
            if (!c.alive) continue;
            const int su =
                std::max(basis[c.i].sugar + wdeg(c.lcm) - wdeg(basis[c.i].lm()),
                         h.sugar + wdeg(c.lcm) - wdeg(lmt));
            pairs.insert({c.i, t, c.lcm, su});
        }

        for (int i = 0; i < t; ++i)
            if (!redundant[i] && lmt.divides(basis[i].lm())) redundant[i] = 1;
        lead_mask.push_back(support_mask(lmt));
        basis.push_back(std::move(h));
        redundant.push_back(0);
    }

    // For homogeneous degree-by-degree runs only the freshly finished
    // degree can have reducible tails; lower degrees were interreduced at
    // their own boundary.
    void interreduce_tails(int only_degree = -1) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (redundant[i] || basis[i].t.size() <= 1) continue;
            if (only_degree >= 0 && wdeg(basis[i].lm()) != only_degree) continue;
            IntPoly r = normal_form(basis[i], static_cast<int>(i));
            if (!r.zero() && r.lm() == basis[i].lm()) basis[i] = std::move(r);
        }
    }

    // --- main loop ---------------------------------------------------------

    bool run_was_homogeneous = false;
    int run_final_degree = -1;

    // Returns true when the run was complete (not degree-truncated).
    bool run(std::vector<IntPoly> inputs) {
        std::sort(inputs.begin(), inputs.end(), [this](const IntPoly& a, const IntPoly& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            return cmp(a.lm(), b.lm()) < 0;
        });
        bool all_homogeneous = true;
        std::size_t next_input = 0;
        int current_degree = -1;
        bool complete = true;

        auto key_of_next = [&]() -> long {
            long k = std::numeric_limits<long>::max();
            if (next_input < inputs.size())
                k = std::min<long>(k, inputs[next_input].sugar);
            if (!pairs.empty()) k = std::min<long>(k, pairs.begin()->sugar);
            return k;
        };

        for (const IntPoly& p : inputs) {
            const int d = wdeg(p.t.front().m);
            for (const ITerm& t : p.t)
                if (wdeg(t.m) != d) all_homogeneous = false;
        }

        for (;;) {
            const long key = key_of_next();
            if (key == std::numeric_limits<long>::max()) break;
            if (opts.truncate_degree >= 0 && key > opts.truncate_degree) {
                complete = false;
                break;
            }
            if (all_homogeneous && key != current_degree) {
                if (current_degree >= 0) interreduce_tails(current_degree);
                current_degree = static_cast<int>(key);
                run_final_degree = current_degree;
                run_was_homogeneous = true;
                if (opts.progress)
                    *opts.progress << "groebner: degree " << current_degree
                                   << ", basis " << basis.size() << ", queue "
                                   << pairs.size() << '\n';
            }
            check_budget();

            IntPoly h;
            if (next_input < inputs.size() && inputs[next_input].sugar <= key) {
                h = normal_form(inputs[next_input++]);
            } else {
                Pair pr = *pairs.begin();
                pairs.erase(pairs.begin());
                ++pairs_done;
                const IntPoly& f = basis[pr.i];
                const IntPoly& g = basis[pr.j];
                Int d;
                mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
                Int cf, cg;
                mpz_divexact(cf.get_mpz_t(), g.lc().get_mpz_t(), d.get_mpz_t());
                mpz_divexact(cg.get_mpz_t(), f.lc().get_mpz_t(), d.get_mpz_t());
                Geo acc(this);
                acc.add(cf, pr.lcm.divided_by(f.lm()), f.t, 0);
                acc.add(-cg, pr.lcm.divided_by(g.lm()), g.t, 0);
                h = normal_form(acc, pr.sugar);
            }
            if (!h.zero()) {
                if (h.lm().is_one()) { // unit ideal
                    basis.clear();
                    redundant.clear();
                    lead_mask.clear();
                    pairs.clear();
                    IntPoly one;
                    one.t.push_back({Monomial::one(), Int(1)});
                    basis.push_back(std::move(one));
                    redundant.push_back(0);
                    lead_mask.push_back(0);
                    return true;
                }
                add_basis_element(std::move(h));
            }
        }
        return complete;
    }

    std::vector<Polynomial> reduced_output() {
        // minimalize, tail-reduce, sort ascending by leading monomial
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (redundant[i]) continue;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || redundant[j]) continue;
                if (basis[j].lm().divides(basis[i].lm()) &&
                    !(basis[j].lm() == basis[i].lm() && j > i)) {
                    redundant[i] = 1;
                    break;
                }
            }
        }
        interreduce_tails(run_was_homogeneous ? run_final_degree : -1);
        std::vector<const IntPoly*> keep;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (!redundant[i]) keep.push_back(&basis[i]);
        std::sort(keep.begin(), keep.end(), [this](const IntPoly* a, const IntPoly* b) {
            return cmp(a->lm(), b->lm()) < 0;
        });
        std::vector<Polynomial> out;
        out.reserve(keep.size());
        for (const IntPoly* p : keep) out.push_back(to_poly(*p));
        return out;
    }
};

} // namespace

IdealBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                      const GBOptions& opts) {
    IdealBasis out;
    out.order = order;
    UniversePtr u;
    std::vector<Polynomial> nonzero;
    for (const Polynomial& g : gens) {
        if (!u && g.universe()) u = g.universe();
        if (g.universe() && !same_universe(u, g.universe()))
            throw std::invalid_argument("buchberger: universes differ");
        if (!g.is_zero()) nonzero.push_back(g);
    }
    out.universe = u;
    if (nonzero.empty()) {
        out.groebner_flag = true;
        return out;
    }

    Engine e(u, order, opts);
    std::vector<IntPoly> inputs;
    inputs.reserve(nonzero.size());
    for (const Polynomial& g : nonzero) inputs.push_back(e.to_int(g));
    const bool complete = e.run(std::move(inputs));
    out.generators = e.reduced_output();
    out.groebner_flag = complete;
    return out;
}

Polynomial reduce(const Polynomial& f, const IdealBasis& I) {
    if (f.is_zero() || I.generators.empty()) return f;
    Engine e(I.universe, I.order, GBOptions{});
    for (const Polynomial& g : I.generators) {
        e.basis.push_back(e.to_int(g));
        e.redundant.push_back(0);
        e.lead_mask.push_back(support_mask(e.basis.back().lm()));
    }
    IntPoly r = e.normal_form(e.to_int(f));
    if (r.zero()) return Polynomial(I.universe);
    return e.to_poly(r);
}

bool membership(const Polynomial& f, const IdealBasis& I) {
    if (!I.groebner_flag)
        throw std::invalid_argument("membership: basis lacks groebner_flag");
    if (f.is_zero()) return true;
    if (I.generators.empty()) return false;
    return reduce(f, I).is_zero();
}

Polynomial cast_to_universe(const Polynomial& p, const UniversePtr& target) {
    const UniversePtr& src = p.universe();
    std::vector<std::size_t> map(src->size());
    for (std::size_t i = 0; i < src->size(); ++i) {
        auto idx = target->index_of(src->name(i));
        if (!idx) {
            // variable absent from target: only legal if unused
            map[i] = kMaxVars;
            continue;
        }
        map[i] = *idx;
    }
    std::vector<Term> ts;
    ts.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        Monomial m;
        for (std::size_t i = 0; i < src->size(); ++i) {
            if (!t.m.e[i]) continue;
            if (map[i] >= kMaxVars)
                throw std::invalid_argument("cast_to_universe: variable " +
                                            src->name(i) + " not in target");
            m.e[map[i]] = t.m.e[i];
        }
        m.deg = t.m.deg;
        ts.push_back({m, t.c});
    }
    return Polynomial(target, std::move(ts));
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, std::size_t k,
                                  const GBOptions& opts) {
    if (gens.empty()) return {};
    const UniversePtr u = gens.front().universe();
    IdealBasis gb = buchberger(gens, MonomialOrder::block_elim(k), opts);

    std::vector<std::string> rest(u->names().begin() + k, u->names().end());
    UniversePtr ru = make_universe(rest);
    std::vector<Polynomial> out;
    for (const Polynomial& g : gb.generators) {
        bool free_of_block = true;
        for (std::size_t i = 0; i < k && free_of_block; ++i)
            if (g.leading_term(gb.order).m.e[i]) free_of_block = false;
        if (free_of_block) out.push_back(cast_to_universe(g, ru));
    }
    return out;
}

std::vector<Polynomial> intersect(const std::vector<Polynomial>& I,
                                  const std::vector<Polynomial>& J,
                                  const GBOptions& opts) {
    if (I.empty() || J.empty()) return {}; // intersection with the zero ideal
    const UniversePtr u = I.front().universe();
    for (const Polynomial& p : J)
        if (!same_universe(u, p.universe()))
            throw std::invalid_argument("intersect: universes differ");

    std::string tag = "t";
    while (u->index_of(tag)) tag = "t_" + tag;
    std::vector<std::string> names;
    names.push_back(tag);
    names.insert(names.end(), u->names().begin(), u->names().end());
    UniversePtr eu = make_universe(std::move(names));

    const Polynomial t = Polynomial::variable(eu, 0);
    const Polynomial one_minus_t = Polynomial::constant(eu, 1) - t;
    std::vector<Polynomial> ext;
    for (const Polynomial& g : I) ext.push_back(t * cast_to_universe(g, eu));
    for (const Polynomial& h : J) ext.push_back(one_minus_t * cast_to_universe(h, eu));

    // the tag carries weight zero, so homogeneous inputs keep the
    // construction graded (and degree truncation meaningful)
    GBOptions o = opts;
    o.weights.assign(eu->size(), 1);
    o.weights[0] = 0;

    std::vector<Polynomial> elim = eliminate(ext, 1, o);
    std::vector<Polynomial> out;
    out.reserve(elim.size());
    for (const Polynomial& g : elim) out.push_back(cast_to_universe(g, u));
    return out;
}

std::map<int, int> minimal_generator_degrees(const std::vector<Polynomial>& gens,
                                             int max_degree, const GBOptions& opts) {
    std::vector<Polynomial> nonzero;
    UniversePtr u;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous())
            throw std::invalid_argument("minimal_generator_degrees: inhomogeneous input");
        if (!u) u = g.universe();
        nonzero.push_back(g);
    }
    std::map<int, int> profile;
    if (nonzero.empty()) return profile;
    const int n = static_cast<int>(u->size());

    // dim of the degree-d piece of the ideal generated by gens of degree <= e,
    // through a degree-truncated basis.
    auto graded_dim = [&](int e, int d) -> Int {
        std::vector<Polynomial> sub;
        for (const Polynomial& g : nonzero)
            if (g.total_degree() <= e) sub.push_back(g);
        if (sub.empty()) return 0;
        GBOptions o = opts;
        o.truncate_degree = d;
        IdealBasis gb = buchberger(sub, MonomialOrder::grevlex(), o);
        std::vector<Monomial> lead;
        for (const Polynomial& g : gb.generators)
            if (g.total_degree() <= d) lead.push_back(g.leading_term().m);
        const std::vector<Int> num = hilbert_numerator(lead, n);
        // dim R_d - HF(R/L, d)
        Int hf = 0;
        for (std::size_t i = 0; i < num.size() && static_cast<int>(i) <= d; ++i)
            hf += num[i] * binomial(d - static_cast<int>(i) + n - 1, n - 1);
        return binomial(d + n - 1, n - 1) - hf;
    };

    for (int d = 1; d <= max_degree; ++d) {
        Int full = graded_dim(d, d);
        Int lower = graded_dim(d - 1, d);
        Int count = full - lower;
        if (count != 0) profile[d] = static_cast<int>(count.get_si());
    }
    return profile;
}

} // namespace lie4
