#include "qhopf/tensor.hpp"

#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

Tensor2 Tensor2::unit(SlotTag s1, SlotTag s2) {
    Tensor2 t(s1, s2);
    t.add_term(Word::one(), Word::one(), FieldElement::one());
    return t;
}

FieldElement Tensor2::coeff(const Word& u, const Word& v) const {
    auto it = terms_.find({u, v});
    return it == terms_.end() ? FieldElement::zero() : it->second;
}

void Tensor2::add_term(const Word& u, const Word& v, const FieldElement& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(u, v);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor2 Tensor2::operator-() const {
    Tensor2 t(s1_, s2_);
    for (const auto& [k, c] : terms_) t.terms_.emplace(k, -c);
    return t;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    Tensor2 t = *this;
    t += o;
    return t;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    Tensor2 t = *this;
    t -= o;
    return t;
}

Tensor2 Tensor2::scaled(const FieldElement& c) const {
    Tensor2 t(s1_, s2_);
    if (c.is_zero()) return t;
    for (const auto& [k, k2] : terms_) t.terms_.emplace(k, k2 * c);
    return t;
}

std::string Tensor2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs != "1") os << "(" << cs << ")*";
        os << s1_.pres->render_word(k.first) << " (x) " << s2_.pres->render_word(k.second);
    }
    return os.str();
}

void Tensor3::add_term(const Word& u, const Word& v, const Word& w, const FieldElement& c) {
    if (c.is_zero()) return;
    auto key = std::make_tuple(u, v, w);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    for (const auto& [k, c] : o.terms_) add_term(std::get<0>(k), std::get<1>(k), std::get<2>(k), -c);
    return *this;
}

std::string Tensor3::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.to_string();
        if (cs != "1") os << "(" << cs << ")*";
        os << s1_.pres->render_word(std::get<0>(k)) << " (x) " << s2_.pres->render_word(std::get<1>(k))
           << " (x) " << s3_.pres->render_word(std::get<2>(k));
    }
    return os.str();
}

Tensor2 tensor_product(const NcPoly& a, const NcPoly& b, SlotTag s1, SlotTag s2) {
    Tensor2 t(s1, s2);
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) t.add_term(u, v, cu * cv);
    return t;
}

Tensor2 tensor_product(const NcPoly& a, const NcPoly& b) {
    return tensor_product(a, b, SlotTag{a.pres(), nullptr}, SlotTag{b.pres(), nullptr});
}

Tensor2 tensor_multiply(const Tensor2& a, const Tensor2& b) {
    if (!(a.slot1() == b.slot1()) || !(a.slot2() == b.slot2()))
        throw domain_error("tensor_multiply: slot mismatch");
    if (a.slot1().space || a.slot2().space)
        throw domain_error("tensor_multiply: slots must be plain algebras");
    const Presentation* p1 = a.slot1().pres;
    const Presentation* p2 = a.slot2().pres;
    Tensor2 out(a.slot1(), a.slot2());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            NcPoly left = p1->nf_word(Word::concat(ka.first, kb.first));
            NcPoly right = p2->nf_word(Word::concat(ka.second, kb.second));
            FieldElement c = ca * cb;
            for (const auto& [u, cu] : left.terms())
                for (const auto& [v, cv] : right.terms()) out.add_term(u, v, c * cu * cv);
        }
    }
    return out;
}

Tensor2 left_multiply_slot(const NcPoly& u, const Tensor2& t, int slot) {
    SlotTag s = slot == 1 ? t.slot1() : t.slot2();
    if (s.space) throw domain_error("left_multiply_slot: quotient slot is not an algebra");
    const Presentation* p = s.pres;
    Tensor2 out(t.slot1(), t.slot2());
    for (const auto& [k, c] : t.terms()) {
        NcPoly prod = p->multiply(u, NcPoly::from_word(p, slot == 1 ? k.first : k.second));
        for (const auto& [w, cw] : prod.terms()) {
            if (slot == 1)
                out.add_term(w, k.second, c * cw);
            else
                out.add_term(k.first, w, c * cw);
        }
    }
    return out;
}

Tensor2 apply_slot(const Tensor2& t, int slot, const std::function<NcPoly(const Word&)>& f,
                   SlotTag result_tag) {
    Tensor2 out(slot == 1 ? result_tag : t.slot1(), slot == 1 ? t.slot2() : result_tag);
    for (const auto& [k, c] : t.terms()) {
        NcPoly img = f(slot == 1 ? k.first : k.second);
        for (const auto& [w, cw] : img.terms()) {
            if (slot == 1)
                out.add_term(w, k.second, c * cw);
            else
                out.add_term(k.first, w, c * cw);
        }
    }
    return out;
}

NcPoly apply_slot_scalar(const Tensor2& t, int slot, const std::function<FieldElement(const Word&)>& f) {
    const Presentation* keep = slot == 1 ? t.slot2().pres : t.slot1().pres;
    NcPoly out(keep);
    for (const auto& [k, c] : t.terms()) {
        FieldElement s = f(slot == 1 ? k.first : k.second);
        out.add_term(slot == 1 ? k.second : k.first, c * s);
    }
    return out;
}

Tensor3 apply_slot_expand(const Tensor2& t, int slot, const std::function<Tensor2(const Word&)>& f) {
    Tensor3 out = slot == 1 ? Tensor3(SlotTag{}, SlotTag{}, t.slot2()) : Tensor3(t.slot1(), SlotTag{}, SlotTag{});
    bool tags_set = false;
    Tensor3 result;
    for (const auto& [k, c] : t.terms()) {
        Tensor2 img = f(slot == 1 ? k.first : k.second);
        if (!tags_set) {
            if (slot == 1)
                result = Tensor3(img.slot1(), img.slot2(), t.slot2());
            else
                result = Tensor3(t.slot1(), img.slot1(), img.slot2());
            tags_set = true;
        }
        for (const auto& [kk, cc] : img.terms()) {
            if (slot == 1)
                result.add_term(kk.first, kk.second, k.second, c * cc);
            else
                result.add_term(k.first, kk.first, kk.second, c * cc);
        }
    }
    if (!tags_set) {
        // empty input: infer tags from a probe on the unit word
        Tensor2 img = f(Word::one());
        if (slot == 1)
            result = Tensor3(img.slot1(), img.slot2(), t.slot2());
        else
            result = Tensor3(t.slot1(), img.slot1(), img.slot2());
    }
    return result;
}

bool numeric_equal(const Tensor2& a, const Tensor2& b, const NumericPoint& pt) {
    Tensor2 diff = a - b;
    for (const auto& [k, c] : diff.terms())
        if (!is_zero(c.evaluate(pt))) return false;
    return true;
}

bool numeric_equal(const Tensor3& a, const Tensor3& b, const NumericPoint& pt) {
    Tensor3 diff = a;
    diff -= b;
    for (const auto& [k, c] : diff.terms())
        if (!is_zero(c.evaluate(pt))) return false;
    return true;
}

}  // namespace qhopf
