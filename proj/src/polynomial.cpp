#include "lie4/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace lie4 {

VarUniverse::VarUniverse(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars)
        throw std::invalid_argument("VarUniverse: too many variables");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("VarUniverse: duplicate name " + names_[i]);
    }
}

std::optional<std::size_t> VarUniverse::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

UniversePtr make_universe(std::vector<std::string> names) {
    return std::make_shared<const VarUniverse>(std::move(names));
}

bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

Monomial Monomial::var(std::size_t i, std::uint8_t k) {
    Monomial m;
    m.e[i] = k;
    m.deg = k;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        const unsigned s = unsigned(e[i]) + unsigned(o.e[i]);
        if (s > 255) throw std::overflow_error("Monomial: exponent above 255");
        r.e[i] = static_cast<std::uint8_t>(s);
    }
    r.deg = deg + o.deg;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i)
        r.e[i] = static_cast<std::uint8_t>(e[i] - o.e[i]);
    r.deg = deg - o.deg;
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
        if (e[i] && o.e[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        d += r.e[i];
    }
    r.deg = d;
    return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    std::uint64_t w[4];
    std::memcpy(w, m.e.data(), sizeof(w));
    for (std::uint64_t x : w) {
        x *= 0xff51afd7ed558ccdull;
        x ^= x >> 33;
        h = (h ^ x) * 0xc4ceb9fe1a85ec53ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
}

namespace {

int cmp_grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                      std::size_t hi) {
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b,
            std::size_t nvars) {
    switch (order.kind) {
    case OrderKind::lex:
        for (std::size_t i = 0; i < nvars; ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        return 0;
    case OrderKind::grevlex:
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        return cmp_grevlex_range(a, b, 0, nvars);
    case OrderKind::block_elim: {
        const std::size_t k = std::min(order.block, nvars);
        if (int c = cmp_grevlex_range(a, b, 0, k)) return c;
        return cmp_grevlex_range(a, b, k, nvars);
    }
    }
    return 0;
}

Polynomial::Polynomial(UniversePtr u, std::vector<Term> terms)
    : u_(std::move(u)), terms_(std::move(terms)) {
    normalize();
}

void Polynomial::normalize() {
    const std::size_t n = u_->size();
    std::sort(terms_.begin(), terms_.end(), [n](const Term& a, const Term& b) {
        return compare(MonomialOrder::grevlex(), a.m, b.m, n) > 0;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(UniversePtr u, Rat c) {
    Polynomial p(std::move(u));
    if (c != 0) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
}

Polynomial Polynomial::variable(UniversePtr u, std::size_t index) {
    if (index >= u->size()) throw std::invalid_argument("variable: bad index");
    Polynomial p(std::move(u));
    p.terms_.push_back({Monomial::var(index), Rat(1)});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero");
    return terms_.front();
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::logic_error("leading_term of zero");
    const std::size_t n = u_->size();
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
        if (compare(order, t.m, best->m, n) > 0) best = &t;
    return *best;
}

int Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    // Canonical order is degree-first, so the front term has maximal degree.
    return static_cast<int>(terms_.front().m.deg);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint32_t d = terms_.front().m.deg;
    for (const Term& t : terms_)
        if (t.m.deg != d) return false;
    return true;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
}

namespace {

void require_same(const UniversePtr& a, const UniversePtr& b) {
    if (!same_universe(a, b))
        throw std::invalid_argument("polynomial universes differ");
}

} // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    require_same(u_, o.u_);
    const std::size_t n = u_->size();
    Polynomial r(u_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = compare(MonomialOrder::grevlex(), terms_[i].m, o.terms_[j].m, n);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].c + o.terms_[j].c;
            if (s != 0) r.terms_.push_back({terms_[i].m, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same(u_, o.u_);
    Polynomial r(u_);
    if (is_zero() || o.is_zero()) return r;
    std::unordered_map<Monomial, Rat, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) acc[a.m * b.m] += a.c * b.c;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, std::move(c)});
    r.normalize();
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(u_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (Term& t : r.terms_) t.c *= c;
    return r;
}

Polynomial operator*(const Rat& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
    Polynomial r(u_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back({t.m * m, t.c * c});
    return r; // multiplying by a monomial preserves the term order
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c)
            return false;
    return true;
}

Rat Polynomial::coeff(const Monomial& m) const {
    for (const Term& t : terms_)
        if (t.m == m) return t.c;
    return Rat(0);
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != u_->size())
        throw std::invalid_argument("evaluate: point size mismatch");
    Rat sum = 0;
    for (const Term& t : terms_) {
        Rat v = t.c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint8_t k = 0; k < t.m.e[i]; ++k) v *= point[i];
        }
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    const Rat lc = terms_.front().c;
    return *this * (Rat(1) / lc);
}

Polynomial Polynomial::primitive_part() const {
    if (is_zero()) return *this;
    Int den = 1;
    for (const Term& t : terms_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den().get_mpz_t());
    Int content = 0;
    for (const Term& t : terms_) {
        Rat v = t.c * den;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_num().get_mpz_t());
    }
    Rat scale = make_rat(den, content);
    if (terms_.front().c < 0) scale = -scale;
    return *this * scale;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        const bool neg = t.c < 0;
        Rat a = neg ? Rat(-t.c) : t.c;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const bool unit = (a == 1);
        if (!unit || t.m.is_one()) os << lie4::to_string(a);
        bool any = !unit || t.m.is_one();
        for (std::size_t i = 0; i < u_->size(); ++i) {
            if (!t.m.e[i]) continue;
            if (any) os << '*';
            os << u_->name(i);
            if (t.m.e[i] > 1) os << '^' << static_cast<int>(t.m.e[i]);
            any = true;
        }
    }
    return os.str();
}

Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images) {
    if (images.size() != f.universe()->size())
        throw std::invalid_argument("substitute: need one image per variable");
    UniversePtr target;
    for (const Polynomial& im : images) {
        if (!im.universe()) continue;
        if (!target)
            target = im.universe();
        else
            require_same(target, im.universe());
    }
    if (!target) throw std::invalid_argument("substitute: no target universe");

    Polynomial acc(target);
    for (const Term& t : f.terms()) {
        Polynomial prod = Polynomial::constant(target, t.c);
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (std::uint8_t k = 0; k < t.m.e[i]; ++k) {
                if (images[i].universe() == nullptr)
                    throw std::invalid_argument("substitute: missing image for used variable " +
                                                f.universe()->name(i));
                prod = prod * images[i];
            }
        }
        acc += prod;
    }
    return acc;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order) {
    if (G.empty()) throw std::invalid_argument("normal_form: empty divisor list");
    const UniversePtr& u = f.universe();
    for (const Polynomial& g : G) {
        require_same(u, g.universe());
        if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
    }
    const std::size_t n = u->size();

    Polynomial p = f, r(u);
    while (!p.is_zero()) {
        const Term lt = p.leading_term(order);
        bool reduced = false;
        for (const Polynomial& g : G) {
            const Term& lg = g.leading_term(order);
            if (lg.m.divides(lt.m)) {
                p -= g.mul_term(lt.m.divided_by(lg.m), lt.c / lg.c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r += Polynomial(u, {lt});
            p -= Polynomial(u, {lt});
        }
    }
    (void)n;
    return r;
}

namespace {

struct Lexer {
    std::string_view s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return s[i];
    }
    char get() {
        skip();
        return s[i++];
    }
    std::string number() {
        skip();
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("parse: expected number");
        std::string n(s.substr(i, j - i));
        i = j;
        return n;
    }
    std::string name() {
        skip();
        std::size_t j = i;
        while (j < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
        if (j == i) throw std::invalid_argument("parse: expected name");
        std::string n(s.substr(i, j - i));
        i = j;
        return n;
    }
};

} // namespace

Polynomial parse_polynomial(const UniversePtr& u, std::string_view text) {
    Lexer lx{text};
    std::vector<Term> terms;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        if (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.get() == '-') sign = -1;
        } else if (!first) {
            throw std::invalid_argument("parse: expected '+' or '-'");
        }
        first = false;
        if (lx.eof()) throw std::invalid_argument("parse: dangling sign");

        Rat coeff(sign);
        Monomial mono = Monomial::one();
        bool want_factor = true;
        while (want_factor) {
            if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                Rat num(Int(lx.number()));
                if (!lx.eof() && lx.peek() == '/') {
                    lx.get();
                    Int den(lx.number());
                    if (den == 0) throw std::invalid_argument("parse: zero denominator");
                    num /= Rat(den);
                }
                coeff *= num;
            } else {
                std::string nm = lx.name();
                auto idx = u->index_of(nm);
                if (!idx)
                    throw std::invalid_argument("parse: unknown variable '" + nm + "'");
                int k = 1;
                if (!lx.eof() && lx.peek() == '^') {
                    lx.get();
                    k = std::stoi(lx.number());
                    if (k < 0 || k > 255)
                        throw std::invalid_argument("parse: exponent out of range");
                }
                mono = mono * Monomial::var(*idx, static_cast<std::uint8_t>(k));
            }
            want_factor = !lx.eof() && lx.peek() == '*';
            if (want_factor) lx.get();
        }
        terms.push_back({mono, std::move(coeff)});
    }
    return Polynomial(u, std::move(terms));
}

} // namespace lie4
