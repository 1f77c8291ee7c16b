#pragma once

#include "qhopf/embedding.hpp"
#include "qhopf/hopf.hpp"

namespace qhopf {

enum class PresetName { plane, glq2, suq2, sphere, sphere_mu_eq_nu };

const char* preset_name_string(PresetName p);
std::optional<PresetName> preset_from_string(const std::string& s);

struct PresetBundle {
    PresentationPtr pres;
    HopfPtr hopf;  // null for base algebras (plane, spheres)
};

/// The named presentation with its rules, orders, gradings and (where the
/// construction defines them) coalgebra structure maps.  A field tag override
/// widens the coefficient field, e.g. suq2 over Q(q,p) for quotient work.
PresetBundle make_preset(PresetName name, std::optional<FieldTag> field = std::nullopt);

/// The two-parameter form of the quantum sphere over Q(q,p): generators are
/// the original ones divided by mu - nu, so all structure constants live in
/// q and p alone.
PresetBundle make_sphere_p();

/// The quantum plane with an inverted group-like generator adjoined,
/// presented on a, a^-1, b with ab = q^2 ba; carries the full Hopf structure.
PresetBundle make_cq2();

enum class SphereFieldMode { pq, munu };
const char* sphere_mode_string(SphereFieldMode m);

/// A base algebra embedded in a total Hopf algebra: everything needed to run
/// the quotient construction.
struct EmbeddedSpace {
    PresentationPtr B;
    PresentationPtr H;
    HopfPtr hopf;
    Character kappa;
    Embedding emb;
    /// i_kappa(g) - kappa(g) for each generator of B; generates the coideal
    /// as a right ideal.
    std::vector<NcPoly> ideal_gens;
};

EmbeddedSpace make_plane_space();
EmbeddedSpace make_sphere_space(SphereFieldMode mode);
EmbeddedSpace make_sphere_mu_eq_nu_space();

}  // namespace qhopf
