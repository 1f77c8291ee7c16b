#pragma once

#include <optional>
#include <string>

#include "qhopf/laurent.hpp"

namespace qhopf {

/// Which coefficient field a presentation lives in.  The arithmetic itself is
/// uniform (all values embed in Q(q,p,mu,nu)[t]/(t^2 - mu*nu)); the tag
/// restricts which symbols the parser accepts and how `t` is read.
enum class FieldTag {
    Qq,       ///< Q(q)
    Qqp,      ///< Q(q, p)
    QqMuNuT,  ///< Q(q, mu, nu)[t], t^2 = mu*nu
    QqMu,     ///< Q(q, mu) with t := mu (the mu = nu case)
};

const char* field_tag_name(FieldTag t);
bool field_allows(FieldTag tag, Var v);

/// Gcd-reduced fraction of honest polynomials.  Canonical form: numerator and
/// denominator carry no negative exponents, gcd(num, den) = 1, denominator is
/// integer-primitive with positive leading coefficient.
struct Fraction {
    LaurentPoly num;
    LaurentPoly den = LaurentPoly::one();
    bool operator==(const Fraction&) const = default;
};

/// Rational point for exact numeric evaluation.
struct NumericPoint {
    std::array<Rational, kNumVars> vars{Rational(0), Rational(0), Rational(0), Rational(0)};
    std::optional<Rational> t;

    static NumericPoint standard();  // q=3/2, p=1/3, mu=4, nu=1, t=2
    NumericPoint& set(Var v, Rational r) {
        vars[static_cast<int>(v)] = std::move(r);
        return *this;
    }
};

/// Element of the rational-function field, optionally with a part multiplying
/// the formal square root t (t^2 = mu*nu).  Values are immutable in spirit:
/// every operation returns a fresh canonical element.
class FieldElement {
public:
    FieldElement() = default;

    static FieldElement zero() { return FieldElement(); }
    static FieldElement one() { return from_rational(Rational(1)); }
    static FieldElement from_rational(const Rational& r);
    static FieldElement from_int(long n) { return from_rational(Rational(n)); }
    static FieldElement from_poly(const LaurentPoly& p);
    static FieldElement variable(Var v, int exp = 1);
    static FieldElement q_power(int k) { return variable(Var::q, k); }
    static FieldElement t();
    static FieldElement fraction(const LaurentPoly& num, const LaurentPoly& den);

    bool is_zero() const { return base_.num.is_zero() && ext_.num.is_zero(); }
    bool is_one() const;
    bool has_ext() const { return !ext_.num.is_zero(); }
    const Fraction& base() const { return base_; }
    const Fraction& ext() const { return ext_; }

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;  // throws on zero divisor
    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement inverse() const;
    FieldElement pow(int e) const;

    bool operator==(const FieldElement& o) const { return base_ == o.base_ && ext_ == o.ext_; }

    Rational evaluate(const NumericPoint& pt) const;

    /// Canonical text form, injective on canonical representations.
    std::string to_string() const;

    /// Substitute nu := mu and t := mu (exact specialization used by the
    /// mu = nu presets).
    FieldElement substitute_mu_eq_nu() const;

private:
    Fraction base_;
    Fraction ext_;  // coefficient of t; zero numerator when absent

    static FieldElement make(Fraction base, Fraction ext);
};

FieldElement operator*(const Rational& c, const FieldElement& x);

}  // namespace qhopf
