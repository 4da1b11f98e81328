#ifndef LIE4_POLYNOMIAL_HPP
#define LIE4_POLYNOMIAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lie4/rat.hpp"

namespace lie4 {

// Ordered set of distinct variable names. Universes are immutable and
// shared; a variable's index is stable for the universe's lifetime.
class VarUniverse {
public:
    explicit VarUniverse(std::vector<std::string> names);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool operator==(const VarUniverse& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

using UniversePtr = std::shared_ptr<const VarUniverse>;

UniversePtr make_universe(std::vector<std::string> names);
bool same_universe(const UniversePtr& a, const UniversePtr& b);

// Exponent vectors are capped at kMaxVars variables; every universe in this
// project is far below the cap (24 structure constants, 18 chart
// parameters, 25 with the intersection tag variable).
inline constexpr std::size_t kMaxVars = 32;

struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint32_t deg = 0;

    static Monomial one() { return Monomial{}; }
    static Monomial var(std::size_t i, std::uint8_t k = 1);

    bool is_one() const { return deg == 0; }
    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const; // requires o.divides(*this)
    bool coprime(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& o) const { return deg == o.deg && e == o.e; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

enum class OrderKind { lex, grevlex, block_elim };

// block_elim(k) eliminates the first k variables: the block is compared by
// grevlex first, ties broken by grevlex on the rest.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    std::size_t block = 0;

    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
    static MonomialOrder block_elim(std::size_t k) { return {OrderKind::block_elim, k}; }

    bool operator==(const MonomialOrder&) const = default;
};

// -1, 0, +1 for a < b, a == b, a > b.
int compare(const MonomialOrder& order, const Monomial& a, const Monomial& b,
            std::size_t nvars);

struct Term {
    Monomial m;
    Rat c;
};

// Sparse multivariate polynomial over Q. Terms are kept in descending
// grevlex order with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(UniversePtr u) : u_(std::move(u)) {}
    Polynomial(UniversePtr u, std::vector<Term> terms); // normalizes

    static Polynomial constant(UniversePtr u, Rat c);
    static Polynomial variable(UniversePtr u, std::size_t index);

    const UniversePtr& universe() const { return u_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    // Leading term in the canonical (grevlex) order.
    const Term& leading_term() const;
    // Leading term with respect to an arbitrary order.
    const Term& leading_term(const MonomialOrder& order) const;

    int total_degree() const; // -1 for the zero polynomial
    bool is_homogeneous() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial operator*(const Rat& c) const;
    Polynomial mul_term(const Monomial& m, const Rat& c) const;

    bool operator==(const Polynomial& o) const;

    Rat coeff(const Monomial& m) const;
    Rat evaluate(const std::vector<Rat>& point) const;

    // Monic under grevlex.
    Polynomial monic() const;
    // Integer coefficients with content 1 and positive leading coefficient.
    Polynomial primitive_part() const;

    std::string to_string() const;

private:
    UniversePtr u_;
    std::vector<Term> terms_;

    void normalize();
};

Polynomial operator*(const Rat& c, const Polynomial& p);

// Ring homomorphism determined by variable images. Every variable that
// occurs in f must be mapped; images share one target universe.
Polynomial substitute(const Polynomial& f,
                      const std::vector<Polynomial>& images);

// Remainder of multivariate division of f by the listed sequence G.
// Deterministic given the order and the listed sequence.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G,
                       const MonomialOrder& order);

// Whitespace-insensitive parser for the canonical text format, e.g.
// "a_124*a_131 - a_121*a_134 + 2*a_122^2".
Polynomial parse_polynomial(const UniversePtr& u, std::string_view text);

} // namespace lie4

#endif
