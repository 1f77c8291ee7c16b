#pragma once

#include <vector>

#include "qhopf/field.hpp"

namespace qhopf {

/// Dense univariate polynomial over Q; used for the determinant polynomials
/// P_n and the shifted-coefficient work of the discrete-series remark.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<Rational> coeffs);
    static QPolynomial constant(const Rational& c);
    static QPolynomial x();

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const;
    bool is_zero() const { return coeffs_.empty(); }

    QPolynomial operator+(const QPolynomial& o) const;
    QPolynomial operator-(const QPolynomial& o) const;
    QPolynomial operator*(const QPolynomial& o) const;
    bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

    Rational evaluate(const Rational& x) const;
    /// P(x + c) expanded exactly.
    QPolynomial compose_shift(const Rational& c) const;
    /// Substitute x := p^2 and return the resulting field element.
    FieldElement at_p_squared() const;

    std::string to_string(const char* var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// [m]_q = (q^m - q^-m)/(q - q^-1); zero for m = 0.
FieldElement q_int(int m);

/// [m]_q! with [0]_q! = 1.
FieldElement q_factorial(int m);

/// Balanced Gaussian binomial [m choose k]_q = [m]_q!/([m-k]_q! [k]_q!),
/// computed by exact Laurent division; zero outside 0 <= k <= m.
FieldElement q_binomial(int m, int k);

/// Checks sum_{i+j=r} q^{i m - k j} [k,i]_q [m,j]_q = [k+m, r]_q exactly.
/// The sum constrains i + j = r with 0 <= i <= k, 0 <= j <= m.
bool q_vandermonde_check(int k, int m, int r);

/// P_n(x) = sum_{k=0}^{n} C(2n+1-k, k) x^k.
QPolynomial p_polynomial(int n);

/// c^n_k = sum_{l=k}^{n} (-1/4)^{l-k} C(2n+1-l, l) C(l, k); the coefficients
/// of P_n(x - 1/4).
Rational c_coefficient(int n, int k);

}  // namespace qhopf
