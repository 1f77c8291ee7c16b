#pragma once

#include <functional>
#include <tuple>

#include "qhopf/presentation.hpp"

namespace qhopf {

/// Identifies the vector space a tensor slot ranges over: a presented algebra
/// (space == nullptr) or the representative space of a quotient coalgebra
/// (space points at the owning quotient).  Words index basis elements either
/// way, so H (x) H, H (x) C and C (x) C share one representation.
struct SlotTag {
    const Presentation* pres = nullptr;
    const void* space = nullptr;
    bool operator==(const SlotTag&) const = default;
};

struct PairWordLess {
    const Presentation* p1 = nullptr;
    const Presentation* p2 = nullptr;
    bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
        if (!(a.first == b.first)) return canonical_word_less(*p1, a.first, b.first);
        return canonical_word_less(*p2, a.second, b.second);
    }
};

/// Element of a two-fold tensor product with FieldElement coefficients.
class Tensor2 {
public:
    using TermMap = std::map<std::pair<Word, Word>, FieldElement, PairWordLess>;

    Tensor2() = default;
    Tensor2(SlotTag s1, SlotTag s2)
        : s1_(s1), s2_(s2), terms_(PairWordLess{s1.pres, s2.pres}) {}

    static Tensor2 zero(SlotTag s1, SlotTag s2) { return Tensor2(s1, s2); }
    static Tensor2 unit(SlotTag s1, SlotTag s2);  // 1 (x) 1

    const SlotTag& slot1() const { return s1_; }
    const SlotTag& slot2() const { return s2_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    FieldElement coeff(const Word& u, const Word& v) const;

    void add_term(const Word& u, const Word& v, const FieldElement& c);

    Tensor2 operator-() const;
    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    Tensor2 scaled(const FieldElement& c) const;

    bool operator==(const Tensor2& o) const { return s1_ == o.s1_ && s2_ == o.s2_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    SlotTag s1_, s2_;
    TermMap terms_{PairWordLess{nullptr, nullptr}};
};

struct TripleWordLess {
    const Presentation* p1 = nullptr;
    const Presentation* p2 = nullptr;
    const Presentation* p3 = nullptr;
    bool operator()(const std::tuple<Word, Word, Word>& a, const std::tuple<Word, Word, Word>& b) const {
        if (!(std::get<0>(a) == std::get<0>(b)))
            return canonical_word_less(*p1, std::get<0>(a), std::get<0>(b));
        if (!(std::get<1>(a) == std::get<1>(b)))
            return canonical_word_less(*p2, std::get<1>(a), std::get<1>(b));
        return canonical_word_less(*p3, std::get<2>(a), std::get<2>(b));
    }
};

class Tensor3 {
public:
    using TermMap = std::map<std::tuple<Word, Word, Word>, FieldElement, TripleWordLess>;

    Tensor3() = default;
    Tensor3(SlotTag s1, SlotTag s2, SlotTag s3)
        : s1_(s1), s2_(s2), s3_(s3), terms_(TripleWordLess{s1.pres, s2.pres, s3.pres}) {}

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& u, const Word& v, const Word& w, const FieldElement& c);
    Tensor3& operator-=(const Tensor3& o);
    bool operator==(const Tensor3& o) const {
        return s1_ == o.s1_ && s2_ == o.s2_ && s3_ == o.s3_ && terms_ == o.terms_;
    }
    std::string to_string() const;

private:
    SlotTag s1_, s2_, s3_;
    TermMap terms_{TripleWordLess{nullptr, nullptr, nullptr}};
};

/// a (x) b expanded termwise.
Tensor2 tensor_product(const NcPoly& a, const NcPoly& b, SlotTag s1, SlotTag s2);
Tensor2 tensor_product(const NcPoly& a, const NcPoly& b);

/// Componentwise product (u (x) v)(u' (x) v') = uu' (x) vv'; both slots must
/// be plain presented algebras with matching tags.
Tensor2 tensor_multiply(const Tensor2& a, const Tensor2& b);

/// Multiply the given slot by a polynomial from the left.
Tensor2 left_multiply_slot(const NcPoly& u, const Tensor2& t, int slot);

/// Linear extension of a word-level map on one slot.
Tensor2 apply_slot(const Tensor2& t, int slot, const std::function<NcPoly(const Word&)>& f,
                   SlotTag result_tag);

/// Collapse one slot with a scalar-valued linear map; the survivor keeps its
/// own presentation.
NcPoly apply_slot_scalar(const Tensor2& t, int slot, const std::function<FieldElement(const Word&)>& f);

/// Expand one slot with a Tensor2-valued map (iterated coproducts).
Tensor3 apply_slot_expand(const Tensor2& t, int slot, const std::function<Tensor2(const Word&)>& f);

bool numeric_equal(const Tensor2& a, const Tensor2& b, const NumericPoint& pt);
bool numeric_equal(const Tensor3& a, const Tensor3& b, const NumericPoint& pt);

}  // namespace qhopf
