#include "qhopf/sphere_system.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/linalg.hpp"

namespace qhopf {

std::vector<std::vector<FieldElement>> sphere_system_matrix(int n) {
    if (n < 1) throw domain_error("sphere_system_matrix requires n >= 1");
    const int m = 2 * n - 1;
    FieldElement p = FieldElement::variable(Var::p);
    std::vector<std::vector<FieldElement>> M(m, std::vector<FieldElement>(m, FieldElement::zero()));
    // columns: 0 -> a_0, 2k-1 -> a_{k-}, 2k -> a_{k+} (k = 1..n-1)
    auto col_minus = [&](int k) { return k == 0 ? 0 : 2 * k - 1; };
    auto col_plus = [&](int k) { return k == 0 ? 0 : 2 * k; };
    for (int i = 0; i < m; ++i) M[i][i] = FieldElement::one();
    if (n >= 2) {
        M[0][col_minus(1)] = -p;
        M[0][col_plus(1)] = p;
    }
    for (int k = 1; k <= n - 1; ++k) {
        // row of the "-" family equation at index k
        M[col_minus(k)][col_minus(k - 1)] = p;
        if (k + 1 <= n - 1) M[col_minus(k)][col_minus(k + 1)] = -p;
        // row of the "+" family equation at index k
        M[col_plus(k)][col_plus(k - 1)] = -p;
        if (k + 1 <= n - 1) M[col_plus(k)][col_plus(k + 1)] = p;
    }
    return M;
}

FieldElement sphere_system_det(int n) { return determinant(sphere_system_matrix(n)); }

}  // namespace qhopf
