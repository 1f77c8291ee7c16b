#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "qhopf/rational.hpp"

namespace qhopf {

/// The four commuting parameters of the engine.  Only q is ever used with
/// negative exponents.
enum class Var : int { q = 0, p = 1, mu = 2, nu = 3 };
inline constexpr int kNumVars = 4;

const char* var_name(Var v);

/// Exponent vector.  Graded-lex order with q < p < mu < nu gives canonical
/// term order for display and for leading-term conventions.
struct Monomial {
    std::array<int, kNumVars> e{0, 0, 0, 0};

    int total_degree() const {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    bool is_unit() const { return e == std::array<int, kNumVars>{0, 0, 0, 0}; }
    bool operator==(const Monomial&) const = default;
    Monomial operator*(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }
    /// Componentwise divisibility (all exponents of o fit under this).
    bool divisible_by(const Monomial& o) const {
        for (int i = 0; i < kNumVars; ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }
    Monomial operator/(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kNumVars; ++i) r.e[i] = e[i] - o.e[i];
        return r;
    }
};

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        return a.e < b.e;  // lex, q most significant
    }
};

/// Sparse multivariate Laurent polynomial over Q.  Negative exponents are
/// permitted on q only; the fraction layer (FieldElement) clears them.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    LaurentPoly() = default;
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(Rational(1)); }
    static LaurentPoly constant(const Rational& c);
    static LaurentPoly variable(Var v, int exp = 1);
    static LaurentPoly monomial(const Monomial& m, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    std::optional<Rational> as_constant() const;

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Greatest term under graded-lex; polynomial must be nonzero.
    const std::pair<const Monomial, Rational>& leading() const;

    int degree_in(Var v) const;
    int min_exp(Var v) const;
    bool uses(Var v) const { return degree_in(v) != 0 || min_exp(v) != 0; }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(const Monomial& m) const;  // multiply by monomial

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    /// Exact substitution; throws domain_error if a variable lacks a binding.
    Rational evaluate(const std::array<Rational, kNumVars>& point) const;

    std::string to_string() const;

    void add_term(const Monomial& m, const Rational& c);

private:
    TermMap terms_;
};

/// Componentwise-minimum exponent vector over all terms (the largest monomial
/// dividing the polynomial, possibly with negative q exponent).
Monomial monomial_content(const LaurentPoly& a);

/// Exact division; nullopt if the division leaves a remainder.  Operands must
/// be honest polynomials (no negative exponents).
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Gcd of honest polynomials by primitive-part/content recursion, normalized
/// integer-primitive with positive leading coefficient.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

/// Rational c and integer-primitive P with a = c * P, leading coefficient of
/// P positive.
std::pair<Rational, LaurentPoly> rational_content(const LaurentPoly& a);

}  // namespace qhopf
