#include "qhopf/hopf.hpp"

#include "qhopf/errors.hpp"

namespace qhopf {

HopfStructure::HopfStructure(PresentationPtr pres, std::vector<Tensor2> delta,
                             std::vector<FieldElement> counit, std::optional<std::vector<NcPoly>> antipode)
    : pres_(std::move(pres)), delta_(std::move(delta)), counit_(std::move(counit)),
      antipode_(std::move(antipode)) {
    if (delta_.size() != pres_->gen_count() || counit_.size() != pres_->gen_count())
        throw domain_error("structure maps need one entry per generator");
    if (antipode_ && antipode_->size() != pres_->gen_count())
        throw domain_error("antipode needs one image per generator");
}

Tensor2 HopfStructure::coproduct_word(const Word& w) const {
    Tensor2 acc = Tensor2::unit(htag(), htag());
    for (const auto& r : w.runs())
        for (int i = 0; i < r.exp; ++i) acc = tensor_multiply(acc, delta_[r.gen]);
    return acc;
}

Tensor2 HopfStructure::coproduct(const NcPoly& x) const {
    Tensor2 acc(htag(), htag());
    for (const auto& [w, c] : x.terms()) acc += coproduct_word(w).scaled(c);
    return acc;
}

FieldElement HopfStructure::counit_word(const Word& w) const {
    FieldElement acc = FieldElement::one();
    for (const auto& r : w.runs()) {
        if (counit_[r.gen].is_zero()) return FieldElement::zero();
        acc = acc * counit_[r.gen].pow(r.exp);
    }
    return acc;
}

FieldElement HopfStructure::counit(const NcPoly& x) const {
    FieldElement acc = FieldElement::zero();
    for (const auto& [w, c] : x.terms()) acc += c * counit_word(w);
    return acc;
}

NcPoly HopfStructure::antipode_word(const Word& w) const {
    if (!antipode_) throw domain_error("presentation '" + pres_->name() + "' has no antipode");
    NcPoly acc = NcPoly::unit(pres());
    const auto& runs = w.runs();
    for (auto it = runs.rbegin(); it != runs.rend(); ++it)
        acc = pres_->multiply(acc, pres_->poly_pow((*antipode_)[it->gen], it->exp));
    return acc;
}

NcPoly HopfStructure::antipode(const NcPoly& x) const {
    NcPoly acc(pres());
    for (const auto& [w, c] : x.terms()) acc += antipode_word(w).scaled(c);
    return acc;
}

Tensor3 HopfStructure::coproduct2_left(const Word& w) const {
    return apply_slot_expand(coproduct_word(w), 1, [this](const Word& u) { return coproduct_word(u); });
}

Tensor3 HopfStructure::coproduct2_right(const Word& w) const {
    return apply_slot_expand(coproduct_word(w), 2, [this](const Word& u) { return coproduct_word(u); });
}

AxiomReport HopfStructure::verify_respects_relations() const {
    AxiomReport rep;
    for (const auto& rule : pres_->rules()) {
        Word lhs = Word::letter(rule.g);
        lhs.append(rule.h, 1);
        std::string lhs_str = pres_->render_word(lhs);
        ++rep.checks;
        Tensor2 dl = tensor_multiply(delta_[rule.g], delta_[rule.h]);
        Tensor2 dr = coproduct(rule.rhs);
        if (!(dl == dr))
            rep.failures.push_back({"coproduct-respects-relation", lhs_str, (dl - dr).to_string()});
        ++rep.checks;
        FieldElement el = counit_[rule.g] * counit_[rule.h];
        FieldElement er = counit(rule.rhs);
        if (!(el == er))
            rep.failures.push_back({"counit-respects-relation", lhs_str, (el - er).to_string()});
        if (antipode_) {
            ++rep.checks;
            NcPoly sl = pres_->multiply((*antipode_)[rule.h], (*antipode_)[rule.g]);
            NcPoly sr = antipode(rule.rhs);
            if (!(sl == sr))
                rep.failures.push_back({"antipode-respects-relation", lhs_str, (sl - sr).to_string()});
        }
    }
    return rep;
}

AxiomReport HopfStructure::verify_axioms(int max_len, const std::map<GenId, int>& aux_bounds) const {
    AxiomReport rep;
    const Presentation* P = pres();
    for (const Word& w : P->basis_words(max_len, aux_bounds)) {
        std::string ws = P->render_word(w);
        Tensor2 dw = coproduct_word(w);

        ++rep.checks;
        Tensor3 l = apply_slot_expand(dw, 1, [this](const Word& u) { return coproduct_word(u); });
        Tensor3 r = apply_slot_expand(dw, 2, [this](const Word& u) { return coproduct_word(u); });
        if (!(l == r)) rep.failures.push_back({"coassociativity", ws, ""});

        ++rep.checks;
        NcPoly via_left = apply_slot_scalar(dw, 1, [this](const Word& u) { return counit_word(u); });
        NcPoly via_right = apply_slot_scalar(dw, 2, [this](const Word& u) { return counit_word(u); });
        NcPoly expect = NcPoly::from_word(P, w);
        if (!(via_left == expect) || !(via_right == expect))
            rep.failures.push_back({"counit", ws, ""});

        // Delta stays within the length filtration and preserves the degree d
        // on the left slot term by term.
        ++rep.checks;
        int lw = P->length(w), dd = P->degree_d(w);
        for (const auto& [k, c] : dw.terms()) {
            if (P->length(k.first) > lw || P->length(k.second) > lw) {
                rep.failures.push_back({"length-filtration", ws, P->render_word(k.first)});
                break;
            }
            if (P->degree_d(k.first) != dd) {
                rep.failures.push_back({"degree-d-left-slot", ws, P->render_word(k.first)});
                break;
            }
        }

        if (antipode_) {
            ++rep.checks;
            NcPoly lhs(P), rhs(P);
            for (const auto& [k, c] : dw.terms()) {
                lhs += P->multiply(antipode_word(k.first), NcPoly::from_word(P, k.second)).scaled(c);
                rhs += P->multiply(NcPoly::from_word(P, k.first), antipode_word(k.second)).scaled(c);
            }
            NcPoly eps1 = NcPoly::unit(P, counit_word(w));
            if (!(lhs == eps1) || !(rhs == eps1)) rep.failures.push_back({"antipode", ws, ""});
        }
    }
    return rep;
}

}  // namespace qhopf
