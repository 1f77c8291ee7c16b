#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/field.hpp"
#include "qhopf/word.hpp"

namespace qhopf {

class Presentation;

/// Canonical word order of a presentation: graded by length (invertible
/// generators are weightless), ties broken letterwise by canonical generator
/// rank.  This is the order used for term display, basis enumeration and
/// elimination pivots.
bool canonical_word_less(const Presentation& p, const Word& a, const Word& b);

/// Termination order: graded by per-generator weight, then letter count,
/// then letterwise by termination rank.  Every rewrite rule must strictly
/// decrease it.
bool termination_word_less(const Presentation& p, const Word& a, const Word& b);

struct WordLess {
    const Presentation* pres = nullptr;
    bool operator()(const Word& a, const Word& b) const { return canonical_word_less(*pres, a, b); }
};

/// Noncommutative polynomial: finite FieldElement-weighted sum of words over
/// one presentation's alphabet.
class NcPoly {
public:
    using TermMap = std::map<Word, FieldElement, WordLess>;

    NcPoly() = default;
    explicit NcPoly(const Presentation* pres) : pres_(pres), terms_(WordLess{pres}) {}

    static NcPoly zero(const Presentation* pres) { return NcPoly(pres); }
    static NcPoly unit(const Presentation* pres, FieldElement c = FieldElement::one());
    static NcPoly from_word(const Presentation* pres, const Word& w,
                            FieldElement c = FieldElement::one());

    const Presentation* pres() const { return pres_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    FieldElement coeff(const Word& w) const;
    int max_length() const;

    void add_term(const Word& w, const FieldElement& c);

    NcPoly operator-() const;
    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly operator*(const NcPoly& o) const;  // normalized product
    NcPoly scaled(const FieldElement& c) const;

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    const Presentation* pres_ = nullptr;
    TermMap terms_{WordLess{nullptr}};
};

NcPoly operator*(const FieldElement& c, const NcPoly& x);

struct Generator {
    std::string name;
    std::string display;       // e.g. "c^-1" for the inverse generator
    int degree_d = 0;          // the Z-grading d
    int weight = 1;            // termination weight; 0 for invertible pairs
    bool invertible = false;
    std::optional<GenId> inverse;
    int canonical_rank = 0;
    int canonical_weight = 0;  // secondary grading of the canonical order
    int termination_rank = 0;
};

struct RewriteRule {
    GenId g, h;   // two-letter left hand side g*h
    NcPoly rhs;
};

struct ConfluenceIssue {
    Word witness;
    std::string stage;  // "critical-pair" or "two-strategy"
    std::string left, right;
};

struct ConfluenceReport {
    std::vector<ConfluenceIssue> unresolved;
    int critical_pairs = 0;
    int words_checked = 0;
    bool ok() const { return unresolved.empty(); }
};

/// Algebra presented by generators and a confluent two-letter rewrite system.
/// Built mutable (generators, then rules), then finalized; all observers are
/// const and the object is immutable afterwards.
class Presentation {
public:
    Presentation(std::string name, FieldTag field) : name_(std::move(name)), field_(field) {}

    // -- construction phase -------------------------------------------------
    GenId add_generator(const std::string& name, int degree_d, int weight,
                        const std::string& display = "");
    void set_inverse_pair(GenId a, GenId b);
    void add_rule(GenId g, GenId h, NcPoly rhs);
    void set_canonical_order(const std::vector<GenId>& ascending);
    void set_canonical_weight(GenId g, int weight);
    void set_termination_order(const std::vector<GenId>& ascending);
    void set_involution(std::vector<NcPoly> images);  // one per generator
    /// Validates rule orientation against the termination order and freezes.
    void finalize();

    // -- observers -----------------------------------------------------------
    const std::string& name() const { return name_; }
    FieldTag field() const { return field_; }
    const std::vector<Generator>& generators() const { return gens_; }
    const Generator& generator(GenId g) const { return gens_[g]; }
    std::size_t gen_count() const { return gens_.size(); }
    std::optional<GenId> find_generator(const std::string& name) const;
    GenId gen(const std::string& name) const;  // throws when missing
    const std::vector<RewriteRule>& rules() const { return rules_; }
    const RewriteRule* rule_for(GenId g, GenId h) const;
    bool has_involution() const { return !involution_.empty(); }

    int length(const Word& w) const;
    int weight(const Word& w) const;
    int degree_d(const Word& w) const;
    bool is_normal(const Word& w) const;

    /// Exhaustive rewriting to the unique normal form (given confluence).
    NcPoly normal_form(const NcPoly& x) const;
    NcPoly nf_word(const Word& w, const FieldElement& c = FieldElement::one()) const;
    NcPoly multiply(const NcPoly& a, const NcPoly& b) const;
    NcPoly poly_pow(const NcPoly& a, int e) const;

    /// All irreducible words of length <= max_len; exponents of invertible
    /// generators are bounded by aux_bounds (mandatory, defaulted to max_len).
    std::vector<Word> basis_words(int max_len, const std::map<GenId, int>& aux_bounds = {}) const;

    ConfluenceReport check_confluence(int max_overlap_len) const;

    /// Conjugate-linear anti-multiplicative extension of the generator
    /// star-images; parameters are real so conjugation fixes coefficients.
    NcPoly involution(const NcPoly& x) const;

    std::string render_word(const Word& w) const;

    NcPoly make_poly(std::initializer_list<std::pair<std::vector<std::pair<const char*, int>>, FieldElement>>
                         terms) const;
    Word make_word(std::initializer_list<std::pair<const char*, int>> letters) const;

private:
    friend bool canonical_word_less(const Presentation&, const Word&, const Word&);
    friend bool termination_word_less(const Presentation&, const Word&, const Word&);

    std::optional<std::size_t> find_redex(const Word& w, bool rightmost = false) const;
    NcPoly normal_form_impl(const NcPoly& x, bool rightmost) const;

    std::string name_;
    FieldTag field_;
    std::vector<Generator> gens_;
    std::map<std::string, GenId> by_name_;
    std::vector<RewriteRule> rules_;
    std::vector<std::vector<int>> rule_table_;  // [g][h] -> rule index or -1
    std::vector<NcPoly> involution_;
    bool finalized_ = false;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Coefficientwise numeric agreement at an exact rational point.
bool numeric_equal(const NcPoly& a, const NcPoly& b, const NumericPoint& pt);

}  // namespace qhopf
