#pragma once

#include "qhopf/qcomb.hpp"

namespace qhopf {

/// Coefficient matrix of the (2n-1)-unknown linear system expressing the
/// quotient classes of the mixed sphere monomials through 1, x_n, y_n.
/// Unknown order: a_0, a_{1-}, a_{1+}, a_{2-}, a_{2+}, ...
std::vector<std::vector<FieldElement>> sphere_system_matrix(int n);

/// Determinant of the system matrix, exact in p.
FieldElement sphere_system_det(int n);

}  // namespace qhopf
