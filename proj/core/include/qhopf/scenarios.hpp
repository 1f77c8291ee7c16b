#pragma once

#include "qhopf/presets.hpp"
#include "qhopf/report.hpp"

namespace qhopf {

/// Confluence, Hopf axioms, relation respect, involutions and gradings for
/// every preset (plus the auxiliary presentations of the construction).
Report run_scenario_axioms(int max_degree);

/// The quantum plane as a quotient space: coideal, quotient coalgebra,
/// coinvariants, the explicit coproduct/coaction/action formulas and the
/// polynomial structure of the quotient coalgebra.
Report run_scenario_plane(int max_degree, int c_bound);

/// The quantum sphere as a quotient space: reductions, quotient dimensions,
/// the linear system and its determinants, coproducts, group-like elements
/// and graded coinvariant blocks.
Report run_scenario_sphere(int max_degree, SphereFieldMode mode);

/// The mu = nu conjecture; every outcome is reported as a finding.
Report run_scenario_sphere_mu_eq_nu(int max_degree);

/// Canonical maps: can and its inverse, chi surjectivity witnesses, kernel
/// analysis and the bundle-hypothesis containments.
Report run_scenario_galois(int max_degree);

}  // namespace qhopf
