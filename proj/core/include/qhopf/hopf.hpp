#pragma once

#include "qhopf/tensor.hpp"

namespace qhopf {

struct AxiomFailure {
    std::string axiom;
    std::string witness;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomFailure> failures;
    int checks = 0;
    int skipped = 0;  // checks not runnable at the working truncation
    bool ok() const { return failures.empty(); }
};

/// Coalgebra / Hopf structure maps on a presented algebra: the coproduct and
/// counit always, the antipode optionally.  Generator data extends
/// multiplicatively (anti-multiplicatively for S); well-definedness against
/// the rewrite rules is a verified property, not an assumption.
class HopfStructure {
public:
    HopfStructure(PresentationPtr pres, std::vector<Tensor2> delta, std::vector<FieldElement> counit,
                  std::optional<std::vector<NcPoly>> antipode);

    const Presentation* pres() const { return pres_.get(); }
    PresentationPtr pres_ptr() const { return pres_; }
    bool has_antipode() const { return antipode_.has_value(); }
    SlotTag htag() const { return SlotTag{pres_.get(), nullptr}; }

    Tensor2 coproduct_word(const Word& w) const;
    Tensor2 coproduct(const NcPoly& x) const;
    FieldElement counit_word(const Word& w) const;
    FieldElement counit(const NcPoly& x) const;
    NcPoly antipode_word(const Word& w) const;
    NcPoly antipode(const NcPoly& x) const;

    Tensor3 coproduct2_left(const Word& w) const;   // (Delta (x) id) Delta
    Tensor3 coproduct2_right(const Word& w) const;  // (id (x) Delta) Delta

    /// Delta(l) = Delta(r), eps(l) = eps(r), S(l) = S(r) for every rule l -> r.
    AxiomReport verify_respects_relations() const;

    /// Coassociativity, counit and antipode identities plus the filtration and
    /// d-degree behaviour of Delta on all basis words within the bounds.
    AxiomReport verify_axioms(int max_len, const std::map<GenId, int>& aux_bounds = {}) const;

private:
    PresentationPtr pres_;
    std::vector<Tensor2> delta_;
    std::vector<FieldElement> counit_;
    std::optional<std::vector<NcPoly>> antipode_;
};

using HopfPtr = std::shared_ptr<const HopfStructure>;

}  // namespace qhopf
