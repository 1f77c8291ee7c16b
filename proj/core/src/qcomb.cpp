#include "qhopf/qcomb.hpp"

#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial QPolynomial::constant(const Rational& c) { return QPolynomial({c}); }

QPolynomial QPolynomial::x() { return QPolynomial({Rational(0), Rational(1)}); }

Rational QPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
}

void QPolynomial::trim() {
    while (!coeffs_.empty() && qhopf::is_zero(coeffs_.back())) coeffs_.pop_back();
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return QPolynomial(std::move(out));
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return QPolynomial();
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return QPolynomial(std::move(out));
}

Rational QPolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPolynomial QPolynomial::compose_shift(const Rational& c) const {
    QPolynomial acc;
    QPolynomial base({c, Rational(1)});  // x + c
    QPolynomial pw = QPolynomial::constant(Rational(1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        acc = acc + pw * QPolynomial::constant(coeffs_[i]);
        pw = pw * base;
    }
    return acc;
}

FieldElement QPolynomial::at_p_squared() const {
    FieldElement acc = FieldElement::zero();
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        acc += FieldElement::from_rational(coeffs_[k]) * FieldElement::variable(Var::p, 2 * static_cast<int>(k));
    return acc;
}

std::string QPolynomial::to_string(const char* var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (qhopf::is_zero(coeffs_[k])) continue;
        Rational a = coeffs_[k];
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        first = false;
        Rational aa = abs(a);
        if (k == 0) {
            os << aa.get_str();
        } else {
            if (aa != 1) os << aa.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

namespace {

/// [m]_q as a raw Laurent polynomial: q^{m-1} + q^{m-3} + ... + q^{-(m-1)}.
LaurentPoly q_int_poly(int m) {
    LaurentPoly out;
    for (int e = m - 1; e >= -(m - 1); e -= 2) out += LaurentPoly::variable(Var::q, e);
    return out;
}

}  // namespace

FieldElement q_int(int m) {
    if (m < 0) throw domain_error("q_int requires m >= 0");
    return FieldElement::from_poly(q_int_poly(m));
}

FieldElement q_factorial(int m) {
    FieldElement acc = FieldElement::one();
    for (int k = 1; k <= m; ++k) acc = acc * q_int(k);
    return acc;
}

FieldElement q_binomial(int m, int k) {
    if (m < 0) throw domain_error("q_binomial requires m >= 0");
    if (k < 0 || k > m) return FieldElement::zero();
    if (k == 0 || k == m) return FieldElement::one();
    // [m]_q! / ([m-k]_q! [k]_q!) as one exact Laurent division.  Both sides
    // are shifted by q-powers to honest polynomials first.
    LaurentPoly np = LaurentPoly::one();
    for (int i = m - k + 1; i <= m; ++i) np = np * q_int_poly(i);
    LaurentPoly dp = LaurentPoly::one();
    for (int i = 1; i <= k; ++i) dp = dp * q_int_poly(i);

    Monomial sn = monomial_content(np), sd = monomial_content(dp);
    auto quot = divide_exact(np.shifted(Monomial{} / sn), dp.shifted(Monomial{} / sd));
    if (!quot) throw internal_error("q-binomial division has a remainder");
    Monomial back;
    back.e[static_cast<int>(Var::q)] =
        sn.e[static_cast<int>(Var::q)] - sd.e[static_cast<int>(Var::q)];
    return FieldElement::from_poly(quot->shifted(back));
}

bool q_vandermonde_check(int k, int m, int r) {
    if (r < 0 || r > k + m) throw domain_error("q_vandermonde_check requires 0 <= r <= k+m");
    FieldElement sum = FieldElement::zero();
    for (int i = 0; i <= k; ++i) {
        int j = r - i;
        if (j < 0 || j > m) continue;
        sum += FieldElement::q_power(i * m - k * j) * q_binomial(k, i) * q_binomial(m, j);
    }
    return sum == q_binomial(k + m, r);
}

QPolynomial p_polynomial(int n) {
    if (n < 0) throw domain_error("p_polynomial requires n >= 0");
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (int k = 0; k <= n; ++k) coeffs[k] = Rational(binomial(2 * n + 1 - k, k));
    return QPolynomial(std::move(coeffs));
}

Rational c_coefficient(int n, int k) {
    if (n < 1 || k < 0 || k > n) throw domain_error("c_coefficient requires n >= 1, 0 <= k <= n");
    Rational acc(0);
    for (int l = k; l <= n; ++l) {
        Rational term(binomial(2 * n + 1 - l, l) * binomial(l, k));
        acc += rational_pow(Rational(-1, 4), l - k) * term;
    }
    return acc;
}

}  // namespace qhopf
