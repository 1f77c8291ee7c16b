#include "qhopf/embedding.hpp"

#include "qhopf/errors.hpp"
#include "qhopf/linalg.hpp"

namespace qhopf {

Character::Character(PresentationPtr B, std::vector<FieldElement> values)
    : B_(std::move(B)), values_(std::move(values)) {
    if (values_.size() != B_->gen_count()) throw domain_error("character needs one value per generator");
}

FieldElement Character::of_word(const Word& w) const {
    FieldElement acc = FieldElement::one();
    for (const auto& r : w.runs()) {
        if (values_[r.gen].is_zero()) return FieldElement::zero();
        acc = acc * values_[r.gen].pow(r.exp);
    }
    return acc;
}

FieldElement Character::of_poly(const NcPoly& x) const {
    FieldElement acc = FieldElement::zero();
    for (const auto& [w, c] : x.terms()) acc += c * of_word(w);
    return acc;
}

AxiomReport Character::check() const {
    AxiomReport rep;
    for (const auto& rule : B_->rules()) {
        ++rep.checks;
        FieldElement lhs = values_[rule.g] * values_[rule.h];
        FieldElement rhs = of_poly(rule.rhs);
        if (!(lhs == rhs)) {
            Word l = Word::letter(rule.g);
            l.append(rule.h, 1);
            rep.failures.push_back({"character-respects-relation", B_->render_word(l),
                                    (lhs - rhs).to_string()});
        }
    }
    return rep;
}

Embedding::Embedding(PresentationPtr B, PresentationPtr H, std::vector<NcPoly> images,
                     std::vector<Tensor2> deltaL)
    : B_(std::move(B)), H_(std::move(H)), images_(std::move(images)), deltaL_(std::move(deltaL)) {
    if (images_.size() != B_->gen_count() || deltaL_.size() != B_->gen_count())
        throw domain_error("embedding needs image and coaction per generator");
}

NcPoly Embedding::image_of(const Word& w) const {
    NcPoly acc = NcPoly::unit(H());
    for (const auto& r : w.runs()) acc = H_->multiply(acc, H_->poly_pow(images_[r.gen], r.exp));
    return acc;
}

NcPoly Embedding::image_of(const NcPoly& b) const {
    NcPoly acc(H());
    for (const auto& [w, c] : b.terms()) acc += image_of(w).scaled(c);
    return acc;
}

Tensor2 Embedding::deltaL_of_word(const Word& w) const {
    Tensor2 acc = Tensor2::unit(SlotTag{H(), nullptr}, SlotTag{B(), nullptr});
    for (const auto& r : w.runs())
        for (int i = 0; i < r.exp; ++i) acc = tensor_multiply(acc, deltaL_[r.gen]);
    return acc;
}

Tensor2 Embedding::deltaL_of(const NcPoly& b) const {
    Tensor2 acc(SlotTag{H(), nullptr}, SlotTag{B(), nullptr});
    for (const auto& [w, c] : b.terms()) acc += deltaL_of_word(w).scaled(c);
    return acc;
}

NcPoly Embedding::i_kappa_from_coaction(const NcPoly& b, const Character& kappa) const {
    NcPoly out =
        apply_slot_scalar(deltaL_of(b), 2, [&](const Word& w) { return kappa.of_word(w); });
    NcPoly direct = image_of(b);
    if (!(out == direct))
        throw domain_error("i_kappa from the coaction disagrees with the stored image of " + b.to_string());
    return out;
}

AxiomReport Embedding::relations_check() const {
    AxiomReport rep;
    for (const auto& rule : B_->rules()) {
        Word lhs = Word::letter(rule.g);
        lhs.append(rule.h, 1);
        std::string lstr = B_->render_word(lhs);
        ++rep.checks;
        NcPoly il = H_->multiply(images_[rule.g], images_[rule.h]);
        NcPoly ir = image_of(rule.rhs);
        if (!(il == ir)) rep.failures.push_back({"image-satisfies-relation", lstr, (il - ir).to_string()});
        ++rep.checks;
        Tensor2 dl = tensor_multiply(deltaL_[rule.g], deltaL_[rule.h]);
        Tensor2 dr = deltaL_of(rule.rhs);
        if (!(dl == dr)) rep.failures.push_back({"coaction-is-algebra-map", lstr, ""});
    }
    return rep;
}

AxiomReport Embedding::comodule_check(const HopfStructure& Hhopf, int max_len) const {
    AxiomReport rep;
    for (const Word& w : B_->basis_words(max_len)) {
        std::string ws = B_->render_word(w);
        Tensor2 dl = deltaL_of_word(w);
        ++rep.checks;
        NcPoly counit_side = apply_slot_scalar(dl, 1, [&](const Word& u) { return Hhopf.counit_word(u); });
        if (!(counit_side == NcPoly::from_word(B(), w)))
            rep.failures.push_back({"comodule-counit", ws, counit_side.to_string()});
        ++rep.checks;
        Tensor3 l = apply_slot_expand(dl, 1, [&](const Word& u) { return Hhopf.coproduct_word(u); });
        Tensor3 r = apply_slot_expand(dl, 2, [&](const Word& u) { return deltaL_of_word(u); });
        if (!(l == r)) rep.failures.push_back({"comodule-coassociativity", ws, ""});
    }
    return rep;
}

AxiomReport Embedding::intertwiner_check(const HopfStructure& Hhopf, int max_len) const {
    AxiomReport rep;
    SlotTag h{H(), nullptr};
    for (const Word& w : B_->basis_words(max_len)) {
        ++rep.checks;
        Tensor2 lhs = Hhopf.coproduct(image_of(w));
        Tensor2 rhs = apply_slot(deltaL_of_word(w), 2, [&](const Word& u) { return image_of(u); }, h);
        if (!(lhs == rhs))
            rep.failures.push_back({"intertwiner", B_->render_word(w), (lhs - rhs).to_string()});
    }
    return rep;
}

KernelReport Embedding::chi_L_injectivity(const HopfStructure& Hhopf, int max_len) const {
    KernelReport out;
    std::vector<Word> basis = B_->basis_words(max_len);

    // chi_L(b (x) b') = b_(1) (x) b_(inf) b' laid out over (H-word, B-word)
    // coordinates assigned on first sight.
    std::map<std::pair<Word, Word>, int, PairWordLess> coords{PairWordLess{H(), B()}};
    auto coord = [&](const Word& u, const Word& v) {
        auto key = std::make_pair(u, v);
        auto it = coords.find(key);
        if (it != coords.end()) return it->second;
        int id = static_cast<int>(coords.size());
        coords.emplace(std::move(key), id);
        return id;
    };

    Eliminator elim;
    std::vector<std::pair<Word, Word>> domain;
    for (const Word& b1 : basis) {
        Tensor2 dl = deltaL_of_word(b1);
        for (const Word& b2 : basis) {
            SparseVec vec;
            for (const auto& [k, c] : dl.terms()) {
                NcPoly tail = B_->nf_word(Word::concat(k.second, b2));
                for (const auto& [tw, tc] : tail.terms()) vec_add(vec, coord(k.first, tw), c * tc);
            }
            int idx = static_cast<int>(domain.size());
            domain.emplace_back(b1, b2);
            auto res = elim.insert(std::move(vec), SparseVec{{idx, FieldElement::one()}});
            if (!res.independent) {
                ++out.kernel_dim;
                std::string witness;
                for (const auto& [i, c] : res.aux)
                    witness += (witness.empty() ? "" : " + ") + std::string("(") + c.to_string() + ")*" +
                               B_->render_word(domain[i].first) + " (x) " + B_->render_word(domain[i].second);
                out.kernel_witnesses.push_back(witness);
            }
        }
    }
    out.domain_dim = static_cast<int>(domain.size());
    out.rank = elim.rank();
    return out;
}

}  // namespace qhopf
