#include "qhopf/field.hpp"

#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

const char* field_tag_name(FieldTag t) {
    switch (t) {
        case FieldTag::Qq: return "Q(q)";
        case FieldTag::Qqp: return "Q(q,p)";
        case FieldTag::QqMuNuT: return "Q(q,mu,nu)[t]";
        case FieldTag::QqMu: return "Q(q,mu)";
    }
    return "?";
}

bool field_allows(FieldTag tag, Var v) {
    switch (tag) {
        case FieldTag::Qq: return v == Var::q;
        case FieldTag::Qqp: return v == Var::q || v == Var::p;
        case FieldTag::QqMuNuT: return v == Var::q || v == Var::mu || v == Var::nu;
        case FieldTag::QqMu: return v == Var::q || v == Var::mu;
    }
    return false;
}

NumericPoint NumericPoint::standard() {
    NumericPoint pt;
    pt.vars[static_cast<int>(Var::q)] = Rational(3, 2);
    pt.vars[static_cast<int>(Var::p)] = Rational(1, 3);
    pt.vars[static_cast<int>(Var::mu)] = Rational(4);
    pt.vars[static_cast<int>(Var::nu)] = Rational(1);
    pt.t = Rational(2);
    return pt;
}

namespace {

/// Bring num/den to canonical form: clear negative exponents through a common
/// monomial shift, cancel the gcd, and normalize the denominator to be
/// integer-primitive with positive leading coefficient.
Fraction reduce(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw domain_error("division by zero field element");
    if (num.is_zero()) return Fraction{LaurentPoly::zero(), LaurentPoly::one()};

    Monomial mn = monomial_content(num), md = monomial_content(den);
    Monomial shift;
    for (int i = 0; i < kNumVars; ++i) shift.e[i] = -std::min({mn.e[i], md.e[i], 0});
    if (!shift.is_unit()) {
        num = num.shifted(shift);
        den = den.shifted(shift);
    }

    LaurentPoly g = poly_gcd(num, den);
    if (!g.is_one()) {
        auto qn = divide_exact(num, g);
        auto qd = divide_exact(den, g);
        if (!qn || !qd) throw internal_error("gcd does not divide its operands");
        num = *qn;
        den = *qd;
    }
    auto [dc, dprim] = rational_content(den);
    return Fraction{num.scaled(Rational(1) / dc), dprim};
}

Fraction fr_neg(const Fraction& a) { return Fraction{-a.num, a.den}; }

Fraction fr_add(const Fraction& a, const Fraction& b) {
    if (a.num.is_zero()) return b;
    if (b.num.is_zero()) return a;
    if (a.den == b.den) return reduce(a.num + b.num, a.den);
    return reduce(a.num * b.den + b.num * a.den, a.den * b.den);
}

Fraction fr_mul(const Fraction& a, const Fraction& b) {
    if (a.num.is_zero() || b.num.is_zero()) return Fraction{LaurentPoly::zero(), LaurentPoly::one()};
    if (a.den.is_one() && b.den.is_one()) {
        LaurentPoly n = a.num * b.num;
        Monomial m = monomial_content(n);
        bool has_negative = false;
        for (int e : m.e) has_negative |= e < 0;
        if (!has_negative) return Fraction{n, LaurentPoly::one()};
        return reduce(std::move(n), LaurentPoly::one());
    }
    return reduce(a.num * b.num, a.den * b.den);
}

Fraction fr_scale(const Fraction& a, const Rational& c) {
    if (qhopf::is_zero(c)) return Fraction{LaurentPoly::zero(), LaurentPoly::one()};
    return Fraction{a.num.scaled(c), a.den};
}

bool fraction_renders_atomic(const Fraction& f) { return f.den.is_one() && f.num.size() <= 1; }

std::string fr_to_string(const Fraction& f) {
    if (f.den.is_one()) return f.num.to_string();
    std::ostringstream os;
    os << "(" << f.num.to_string() << ")/(" << f.den.to_string() << ")";
    return os.str();
}

Rational fr_evaluate(const Fraction& f, const std::array<Rational, kNumVars>& point) {
    Rational d = f.den.evaluate(point);
    if (qhopf::is_zero(d)) throw domain_error("denominator evaluates to zero");
    return f.num.evaluate(point) / d;
}

const LaurentPoly& mu_nu_poly() {
    static const LaurentPoly munu = LaurentPoly::variable(Var::mu) * LaurentPoly::variable(Var::nu);
    return munu;
}

}  // namespace

FieldElement FieldElement::make(Fraction base, Fraction ext) {
    FieldElement x;
    x.base_ = std::move(base);
    x.ext_ = std::move(ext);
    if (x.ext_.num.is_zero()) x.ext_ = Fraction{LaurentPoly::zero(), LaurentPoly::one()};
    return x;
}

FieldElement FieldElement::from_rational(const Rational& r) {
    return make(Fraction{LaurentPoly::constant(r), LaurentPoly::one()}, Fraction{});
}

FieldElement FieldElement::from_poly(const LaurentPoly& p) {
    return make(reduce(p, LaurentPoly::one()), Fraction{});
}

FieldElement FieldElement::variable(Var v, int exp) {
    if (exp >= 0) return from_poly(LaurentPoly::variable(v, exp));
    return make(reduce(LaurentPoly::one(), LaurentPoly::variable(v, -exp)), Fraction{});
}

FieldElement FieldElement::t() {
    return make(Fraction{}, Fraction{LaurentPoly::one(), LaurentPoly::one()});
}

FieldElement FieldElement::fraction(const LaurentPoly& num, const LaurentPoly& den) {
    return make(reduce(num, den), Fraction{});
}

bool FieldElement::is_one() const { return ext_.num.is_zero() && base_.den.is_one() && base_.num.is_one(); }

FieldElement FieldElement::operator-() const { return make(fr_neg(base_), fr_neg(ext_)); }

FieldElement FieldElement::operator+(const FieldElement& o) const {
    return make(fr_add(base_, o.base_), fr_add(ext_, o.ext_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    return make(fr_add(base_, fr_neg(o.base_)), fr_add(ext_, fr_neg(o.ext_)));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    // (a + b t)(c + d t) = (ac + bd mu nu) + (ad + bc) t
    Fraction ac = fr_mul(base_, o.base_);
    if (ext_.num.is_zero() && o.ext_.num.is_zero()) return make(std::move(ac), Fraction{});
    Fraction bd = fr_mul(ext_, o.ext_);
    Fraction bdm = fr_mul(bd, Fraction{mu_nu_poly(), LaurentPoly::one()});
    Fraction ad = fr_mul(base_, o.ext_);
    Fraction bc = fr_mul(ext_, o.base_);
    return make(fr_add(ac, bdm), fr_add(ad, bc));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw domain_error("division by zero field element");
    if (ext_.num.is_zero()) {
        return make(reduce(base_.den, base_.num), Fraction{});
    }
    // 1/(a + b t) = (a - b t) / (a^2 - b^2 mu nu); the norm never vanishes
    // because mu*nu is not a square in the base field.
    FieldElement conj = make(base_, fr_neg(ext_));
    FieldElement norm = *this * conj;
    if (!norm.ext_.num.is_zero()) throw internal_error("norm of t-extension element is not in the base field");
    if (norm.base_.num.is_zero()) throw internal_error("vanishing norm in quadratic extension");
    Fraction ninv = reduce(norm.base_.den, norm.base_.num);
    return make(fr_mul(conj.base_, ninv), fr_mul(conj.ext_, ninv));
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::pow(int e) const {
    if (e == 0) return one();
    FieldElement b = e > 0 ? *this : inverse();
    int n = e > 0 ? e : -e;
    FieldElement acc = one();
    while (n > 0) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

Rational FieldElement::evaluate(const NumericPoint& pt) const {
    Rational v = fr_evaluate(base_, pt.vars);
    if (!ext_.num.is_zero()) {
        if (!pt.t) throw domain_error("no binding for t");
        Rational mu = pt.vars[static_cast<int>(Var::mu)];
        Rational nu = pt.vars[static_cast<int>(Var::nu)];
        if (*pt.t * *pt.t != mu * nu) throw domain_error("inconsistent t binding: t^2 != mu*nu");
        v += fr_evaluate(ext_, pt.vars) * *pt.t;
    }
    return v;
}

std::string FieldElement::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool wrote = false;
    if (!base_.num.is_zero()) {
        os << fr_to_string(base_);
        wrote = true;
    }
    if (!ext_.num.is_zero()) {
        std::string coeff = fr_to_string(ext_);
        if (wrote) os << " + ";
        if (coeff == "1") {
            os << "t";
        } else if (coeff == "-1") {
            os << "-t";
        } else if (fraction_renders_atomic(ext_)) {
            os << coeff << "*t";
        } else {
            os << "(" << coeff << ")*t";
        }
    }
    return os.str();
}

FieldElement FieldElement::substitute_mu_eq_nu() const {
    auto subst_poly = [](const LaurentPoly& p) {
        LaurentPoly out;
        for (const auto& [m, c] : p.terms()) {
            Monomial mm = m;
            mm.e[static_cast<int>(Var::mu)] += mm.e[static_cast<int>(Var::nu)];
            mm.e[static_cast<int>(Var::nu)] = 0;
            out.add_term(mm, c);
        }
        return out;
    };
    Fraction base = reduce(subst_poly(base_.num), subst_poly(base_.den));
    FieldElement out = make(base, Fraction{});
    if (!ext_.num.is_zero()) {
        // t becomes mu
        Fraction e = reduce(subst_poly(ext_.num) * LaurentPoly::variable(Var::mu), subst_poly(ext_.den));
        out = make(fr_add(out.base_, e), Fraction{});
    }
    return out;
}

FieldElement operator*(const Rational& c, const FieldElement& x) {
    return FieldElement::from_rational(c) * x;
}

}  // namespace qhopf
