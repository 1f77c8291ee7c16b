#pragma once

#include "qhopf/hopf.hpp"

namespace qhopf {

/// Algebra character kappa: B -> k given by its generator values.
class Character {
public:
    Character() = default;
    Character(PresentationPtr B, std::vector<FieldElement> values);

    const Presentation* B() const { return B_.get(); }
    FieldElement value(GenId g) const { return values_[g]; }
    FieldElement of_word(const Word& w) const;
    FieldElement of_poly(const NcPoly& x) const;

    /// kappa(l) = kappa(r) for every rewrite rule; empty report means valid.
    AxiomReport check() const;

private:
    PresentationPtr B_;
    std::vector<FieldElement> values_;
};

struct KernelReport {
    int domain_dim = 0;
    int kernel_dim = 0;
    int rank = 0;
    std::vector<std::string> kernel_witnesses;
    bool injective() const { return kernel_dim == 0; }
};

/// Algebra inclusion i: B -> H together with the left coaction
/// Delta_L: B -> H (x) B it intertwines.
class Embedding {
public:
    Embedding() = default;
    Embedding(PresentationPtr B, PresentationPtr H, std::vector<NcPoly> images,
              std::vector<Tensor2> deltaL);

    const Presentation* B() const { return B_.get(); }
    const Presentation* H() const { return H_.get(); }
    const NcPoly& image(GenId g) const { return images_[g]; }

    NcPoly image_of(const Word& w) const;
    NcPoly image_of(const NcPoly& b) const;
    Tensor2 deltaL_of_word(const Word& w) const;
    Tensor2 deltaL_of(const NcPoly& b) const;

    /// b |-> b_(1) kappa(b_(infinity)): kappa applied to the B slot of the
    /// coaction.  Throws when the result disagrees with the stored image.
    NcPoly i_kappa_from_coaction(const NcPoly& b, const Character& kappa) const;

    /// Images satisfy the relations of B inside H; Delta_L is an algebra map.
    AxiomReport relations_check() const;
    /// Comodule axioms of Delta_L on basis words of bounded length.
    AxiomReport comodule_check(const HopfStructure& Hhopf, int max_len) const;
    /// Delta(i(b)) = (id (x) i) Delta_L(b) on basis words of bounded length.
    AxiomReport intertwiner_check(const HopfStructure& Hhopf, int max_len) const;

    /// Kernel of chi_L: b (x) b' -> b_(1) (x) b_(inf) b' on bounded basis
    /// pairs, plus a sampled check of the route (id (x) i) chi_L = can (i (x) i).
    KernelReport chi_L_injectivity(const HopfStructure& Hhopf, int max_len) const;

private:
    PresentationPtr B_;
    PresentationPtr H_;
    std::vector<NcPoly> images_;
    std::vector<Tensor2> deltaL_;
};

}  // namespace qhopf
