#include "qhopf/laurent.hpp"

#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

const char* var_name(Var v) {
    switch (v) {
        case Var::q: return "q";
        case Var::p: return "p";
        case Var::mu: return "mu";
        case Var::nu: return "nu";
    }
    return "?";
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
    LaurentPoly r;
    if (!qhopf::is_zero(c)) r.terms_.emplace(Monomial{}, c);
    return r;
}

LaurentPoly LaurentPoly::variable(Var v, int exp) {
    Monomial m;
    m.e[static_cast<int>(v)] = exp;
    return monomial(m, Rational(1));
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Rational& c) {
    LaurentPoly r;
    if (!qhopf::is_zero(c)) r.terms_.emplace(m, c);
    return r;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

std::optional<Rational> LaurentPoly::as_constant() const {
    if (terms_.empty()) return Rational(0);
    if (is_constant()) return terms_.begin()->second;
    return std::nullopt;
}

const std::pair<const Monomial, Rational>& LaurentPoly::leading() const {
    if (terms_.empty()) throw internal_error("leading term of zero polynomial");
    return *terms_.rbegin();
}

int LaurentPoly::degree_in(Var v) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int ev = m.e[static_cast<int>(v)];
        if (first || ev > d) d = ev;
        first = false;
    }
    return terms_.empty() ? 0 : d;
}

int LaurentPoly::min_exp(Var v) const {
    int d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        int ev = m.e[static_cast<int>(v)];
        if (first || ev < d) d = ev;
        first = false;
    }
    return terms_.empty() ? 0 : d;
}

void LaurentPoly::add_term(const Monomial& m, const Rational& c) {
    if (qhopf::is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (qhopf::is_zero(it->second)) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r;
    if (qhopf::is_zero(c)) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
    LaurentPoly r;
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm * m, c);
    return r;
}

Rational LaurentPoly::evaluate(const std::array<Rational, kNumVars>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (qhopf::is_zero(point[i]) && m.e[i] < 0)
                throw domain_error("evaluation with negative exponent at zero");
            t *= rational_pow(point[i], m.e[i]);
        }
        acc += t;
    }
    return acc;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Display in descending graded-lex order, leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational ac = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        std::string vars;
        for (int i = 0; i < kNumVars; ++i) {
            if (m.e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_name(static_cast<Var>(i));
            if (m.e[i] != 1) vars += "^" + std::to_string(m.e[i]);
        }
        if (vars.empty()) {
            os << ac.get_str();
        } else if (ac == 1) {
            os << vars;
        } else {
            os << ac.get_str() << "*" << vars;
        }
    }
    return os.str();
}

Monomial monomial_content(const LaurentPoly& a) {
    Monomial m;
    bool first = true;
    for (const auto& [mm, c] : a.terms()) {
        if (first) {
            m = mm;
            first = false;
        } else {
            for (int i = 0; i < kNumVars; ++i) m.e[i] = std::min(m.e[i], mm.e[i]);
        }
    }
    return m;
}

std::pair<Rational, LaurentPoly> rational_content(const LaurentPoly& a) {
    if (a.is_zero()) return {Rational(0), LaurentPoly::zero()};
    // Integer content: gcd of numerators over lcm of denominators, carrying
    // the sign of the leading coefficient.
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : a.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (sgn(a.leading().second) < 0) content = -content;
    LaurentPoly prim;
    Rational inv = Rational(1) / content;
    for (const auto& [m, c] : a.terms()) prim.add_term(m, c * inv);
    return {content, prim};
}

namespace {

/// Highest variable index present in either polynomial, or -1 if both are
/// constant.
int main_variable(const LaurentPoly& a, const LaurentPoly& b) {
    for (int i = kNumVars - 1; i >= 0; --i) {
        Var v = static_cast<Var>(i);
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return i;
    }
    return -1;
}

/// Coefficients of a viewed as univariate in v (dense by exponent).
std::map<int, LaurentPoly> coeffs_in(const LaurentPoly& a, Var v) {
    std::map<int, LaurentPoly> out;
    for (const auto& [m, c] : a.terms()) {
        Monomial rest = m;
        int e = rest.e[static_cast<int>(v)];
        rest.e[static_cast<int>(v)] = 0;
        out[e].add_term(rest, c);
    }
    return out;
}

LaurentPoly from_coeffs(const std::map<int, LaurentPoly>& cs, Var v) {
    LaurentPoly out;
    for (const auto& [e, c] : cs) {
        Monomial shift;
        shift.e[static_cast<int>(v)] = e;
        out += c.shifted(shift);
    }
    return out;
}

LaurentPoly leading_coeff_in(const LaurentPoly& a, Var v) {
    auto cs = coeffs_in(a, v);
    return cs.rbegin()->second;
}

/// Content of a with respect to v: gcd of its R[v]-coefficients.
LaurentPoly content_in(const LaurentPoly& a, Var v) {
    LaurentPoly g = LaurentPoly::zero();
    for (const auto& [e, c] : coeffs_in(a, v)) g = poly_gcd(g, c);
    return g;
}

LaurentPoly divide_exact_or_throw(const LaurentPoly& num, const LaurentPoly& den) {
    auto q = divide_exact(num, den);
    if (!q) throw internal_error("inexact polynomial division inside gcd");
    return *q;
}

/// Pseudo-remainder of a by b in the variable v, made primitive each round to
/// control coefficient growth (primitive PRS).
LaurentPoly pseudo_rem_primitive(LaurentPoly a, const LaurentPoly& b, Var v) {
    int db = b.degree_in(v);
    LaurentPoly lcb = leading_coeff_in(b, v);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int da = a.degree_in(v);
        LaurentPoly lca = leading_coeff_in(a, v);
        Monomial shift;
        shift.e[static_cast<int>(v)] = da - db;
        a = a * lcb - b.shifted(shift) * lca;
        if (!a.is_zero()) a = rational_content(a).second;
    }
    return a;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) return std::nullopt;
    LaurentPoly rem = num;
    LaurentPoly quot;
    const auto& [dm, dc] = den.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        if (!rm.divisible_by(dm)) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(rm / dm, rc / dc);
        quot += t;
        rem -= t * den;
    }
    return quot;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly::zero();
    if (a.is_zero()) return rational_content(b).second;
    if (b.is_zero()) return rational_content(a).second;

    // Split off monomial parts first; they also give a cheap fast path when
    // one operand is a single term.
    Monomial ma = monomial_content(a), mb = monomial_content(b);
    Monomial mg;
    for (int i = 0; i < kNumVars; ++i) mg.e[i] = std::min(ma.e[i], mb.e[i]);
    LaurentPoly a0 = a.shifted(Monomial{} / ma);
    LaurentPoly b0 = b.shifted(Monomial{} / mb);
    LaurentPoly unit_part = LaurentPoly::monomial(mg, Rational(1));

    if (a0.is_monomial() || b0.is_monomial()) return rational_content(unit_part).second;

    int mv = main_variable(a0, b0);
    if (mv < 0) return rational_content(unit_part).second;
    Var v = static_cast<Var>(mv);

    if (a0.degree_in(v) == 0 || b0.degree_in(v) == 0) {
        // One operand does not involve the main variable: gcd is against the
        // other's content in v.
        LaurentPoly g = a0.degree_in(v) == 0 ? poly_gcd(a0, content_in(b0, v))
                                             : poly_gcd(content_in(a0, v), b0);
        return rational_content(g * unit_part).second;
    }

    LaurentPoly ca = content_in(a0, v), cb = content_in(b0, v);
    LaurentPoly cg = poly_gcd(ca, cb);
    LaurentPoly pa = divide_exact_or_throw(a0, ca);
    LaurentPoly pb = divide_exact_or_throw(b0, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        LaurentPoly r = pseudo_rem_primitive(pa, pb, v);
        pa = pb;
        pb = r;
    }
    // pa is the primitive gcd of the primitive parts up to a unit; strip any
    // content in v it may still carry.
    LaurentPoly pg = divide_exact_or_throw(pa, content_in(pa, v));
    return rational_content(pg * cg * unit_part).second;
}

}  // namespace qhopf
