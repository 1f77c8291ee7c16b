#include "qhopf/presentation.hpp"

#include <algorithm>
#include <sstream>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {
constexpr long kRewriteBudget = 20'000'000;
}

// ---------------------------------------------------------------------------
// word orders

bool canonical_word_less(const Presentation& p, const Word& a, const Word& b) {
    int la = p.length(a), lb = p.length(b);
    if (la != lb) return la < lb;
    {
        // secondary grading: quotient representatives sort below the mixed
        // words whose classes they express
        int wa = 0, wb = 0;
        for (const auto& r : a.runs()) wa += p.generators()[r.gen].canonical_weight * r.exp;
        for (const auto& r : b.runs()) wb += p.generators()[r.gen].canonical_weight * r.exp;
        if (wa != wb) return wa < wb;
    }
    // letterwise lex by canonical rank; a shorter prefix is smaller
    std::size_t ia = 0, ib = 0;
    int offa = 0, offb = 0;
    const auto& ra = a.runs();
    const auto& rb = b.runs();
    while (ia < ra.size() && ib < rb.size()) {
        int ka = p.generators()[ra[ia].gen].canonical_rank;
        int kb = p.generators()[rb[ib].gen].canonical_rank;
        if (ka != kb) return ka < kb;
        int avail_a = ra[ia].exp - offa, avail_b = rb[ib].exp - offb;
        int step = std::min(avail_a, avail_b);
        offa += step;
        offb += step;
        if (offa == ra[ia].exp) {
            ++ia;
            offa = 0;
        }
        if (offb == rb[ib].exp) {
            ++ib;
            offb = 0;
        }
    }
    return ia == ra.size() && ib < rb.size();
}

bool termination_word_less(const Presentation& p, const Word& a, const Word& b) {
    int wa = p.weight(a), wb = p.weight(b);
    if (wa != wb) return wa < wb;
    int ca = a.letter_count(), cb = b.letter_count();
    if (ca != cb) return ca < cb;
    std::size_t ia = 0, ib = 0;
    int offa = 0, offb = 0;
    const auto& ra = a.runs();
    const auto& rb = b.runs();
    while (ia < ra.size() && ib < rb.size()) {
        int ka = p.generators()[ra[ia].gen].termination_rank;
        int kb = p.generators()[rb[ib].gen].termination_rank;
        if (ka != kb) return ka < kb;
        int step = std::min(ra[ia].exp - offa, rb[ib].exp - offb);
        offa += step;
        offb += step;
        if (offa == ra[ia].exp) {
            ++ia;
            offa = 0;
        }
        if (offb == rb[ib].exp) {
            ++ib;
            offb = 0;
        }
    }
    return ia == ra.size() && ib < rb.size();
}

// ---------------------------------------------------------------------------
// NcPoly

NcPoly NcPoly::unit(const Presentation* pres, FieldElement c) {
    NcPoly x(pres);
    x.add_term(Word::one(), c);
    return x;
}

NcPoly NcPoly::from_word(const Presentation* pres, const Word& w, FieldElement c) {
    NcPoly x(pres);
    x.add_term(w, c);
    return x;
}

FieldElement NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? FieldElement::zero() : it->second;
}

int NcPoly::max_length() const {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, pres_->length(w));
    return m;
}

void NcPoly::add_term(const Word& w, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly NcPoly::operator-() const {
    NcPoly r(pres_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
    NcPoly r = *this;
    r += o;
    return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
    NcPoly r = *this;
    r -= o;
    return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const { return pres_->multiply(*this, o); }

NcPoly NcPoly::scaled(const FieldElement& c) const {
    NcPoly r(pres_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

NcPoly operator*(const FieldElement& c, const NcPoly& x) { return x.scaled(c); }

namespace {
// fractions render as (num)/(den), which is already self-delimiting
bool coeff_atomic(const FieldElement& c) {
    return !c.has_ext() && (c.base().num.size() <= 1 || !c.base().den.is_one());
}
}  // namespace

std::string NcPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Word& w = it->first;
        FieldElement c = it->second;
        // pull a display sign out of the leading coefficient
        bool neg = false;
        {
            const LaurentPoly& probe = c.base().num.is_zero() ? c.ext().num : c.base().num;
            neg = sgn(probe.leading().second) < 0;
        }
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        std::string ws = pres_ ? pres_->render_word(w) : std::string("?");
        if (w.empty()) {
            os << (coeff_atomic(c) ? c.to_string() : "(" + c.to_string() + ")");
        } else if (c.is_one()) {
            os << ws;
        } else if (coeff_atomic(c)) {
            os << c.to_string() << "*" << ws;
        } else {
            os << "(" << c.to_string() << ")*" << ws;
        }
    }
    return os.str();
}

bool numeric_equal(const NcPoly& a, const NcPoly& b, const NumericPoint& pt) {
    NcPoly diff = a - b;
    for (const auto& [w, c] : diff.terms()) {
        if (!is_zero(c.evaluate(pt))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Presentation

GenId Presentation::add_generator(const std::string& name, int degree_d, int weight,
                                  const std::string& display) {
    if (finalized_) throw internal_error("presentation already finalized");
    if (by_name_.count(name)) throw domain_error("duplicate generator name: " + name);
    Generator g;
    g.name = name;
    g.display = display.empty() ? name : display;
    g.degree_d = degree_d;
    g.weight = weight;
    g.canonical_rank = static_cast<int>(gens_.size());
    g.termination_rank = static_cast<int>(gens_.size());
    gens_.push_back(g);
    GenId id = static_cast<GenId>(gens_.size() - 1);
    by_name_[name] = id;
    return id;
}

void Presentation::set_inverse_pair(GenId a, GenId b) {
    gens_[a].invertible = gens_[b].invertible = true;
    gens_[a].weight = gens_[b].weight = 0;
    gens_[a].inverse = b;
    gens_[b].inverse = a;
}

void Presentation::add_rule(GenId g, GenId h, NcPoly rhs) {
    if (finalized_) throw internal_error("presentation already finalized");
    rules_.push_back(RewriteRule{g, h, std::move(rhs)});
}

void Presentation::set_canonical_order(const std::vector<GenId>& ascending) {
    for (std::size_t i = 0; i < ascending.size(); ++i) gens_[ascending[i]].canonical_rank = static_cast<int>(i);
}

void Presentation::set_canonical_weight(GenId g, int weight) { gens_[g].canonical_weight = weight; }

void Presentation::set_termination_order(const std::vector<GenId>& ascending) {
    for (std::size_t i = 0; i < ascending.size(); ++i)
        gens_[ascending[i]].termination_rank = static_cast<int>(i);
}

void Presentation::set_involution(std::vector<NcPoly> images) {
    if (images.size() != gens_.size()) throw domain_error("involution needs one image per generator");
    involution_ = std::move(images);
}

void Presentation::finalize() {
    rule_table_.assign(gens_.size(), std::vector<int>(gens_.size(), -1));
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const auto& r = rules_[i];
        if (r.g == r.h) throw domain_error("rule left-hand sides must use distinct letters");
        if (rule_table_[r.g][r.h] != -1) throw domain_error("duplicate rewrite rule");
        rule_table_[r.g][r.h] = static_cast<int>(i);
        Word lhs = Word::letter(r.g);
        lhs.append(r.h, 1);
        for (const auto& [w, c] : r.rhs.terms()) {
            if (!termination_word_less(*this, w, lhs))
                throw domain_error("rule does not decrease the termination order: " + render_word(lhs) +
                                   " -> " + render_word(w));
        }
    }
    finalized_ = true;
}

std::optional<GenId> Presentation::find_generator(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

GenId Presentation::gen(const std::string& name) const {
    auto g = find_generator(name);
    if (!g) throw domain_error("unknown generator: " + name);
    return *g;
}

const RewriteRule* Presentation::rule_for(GenId g, GenId h) const {
    int idx = rule_table_[g][h];
    return idx < 0 ? nullptr : &rules_[idx];
}

int Presentation::length(const Word& w) const {
    int n = 0;
    for (const auto& r : w.runs())
        if (!gens_[r.gen].invertible) n += r.exp;
    return n;
}

int Presentation::weight(const Word& w) const {
    int n = 0;
    for (const auto& r : w.runs()) n += gens_[r.gen].weight * r.exp;
    return n;
}

int Presentation::degree_d(const Word& w) const {
    int n = 0;
    for (const auto& r : w.runs()) n += gens_[r.gen].degree_d * r.exp;
    return n;
}

std::optional<std::size_t> Presentation::find_redex(const Word& w, bool rightmost) const {
    const auto& runs = w.runs();
    if (runs.size() < 2) return std::nullopt;
    if (!rightmost) {
        for (std::size_t i = 0; i + 1 < runs.size(); ++i)
            if (rule_table_[runs[i].gen][runs[i + 1].gen] >= 0) return i;
    } else {
        for (std::size_t i = runs.size() - 1; i-- > 0;)
            if (rule_table_[runs[i].gen][runs[i + 1].gen] >= 0) return i;
    }
    return std::nullopt;
}

bool Presentation::is_normal(const Word& w) const { return !find_redex(w).has_value(); }

NcPoly Presentation::normal_form_impl(const NcPoly& x, bool rightmost) const {
    NcPoly::TermMap work(x.terms().begin(), x.terms().end(), WordLess{this});
    NcPoly out(this);
    long steps = 0;
    while (!work.empty()) {
        auto node = work.extract(std::prev(work.end()));
        const Word& w = node.key();
        const FieldElement& c = node.mapped();
        if (c.is_zero()) continue;
        auto pos = find_redex(w, rightmost);
        if (!pos) {
            out.add_term(w, c);
            continue;
        }
        if (++steps > kRewriteBudget)
            throw internal_error("rewrite step budget exhausted; rule system is not terminating");
        std::size_t i = *pos;
        const RewriteRule& rule = rules_[rule_table_[w.run(i).gen][w.run(i + 1).gen]];
        Word prefix;
        prefix.append_range(w, 0, i);
        prefix.append(w.run(i).gen, w.run(i).exp - 1);
        for (const auto& [rw, rc] : rule.rhs.terms()) {
            Word nw = prefix;
            nw.append(rw);
            nw.append(w.run(i + 1).gen, w.run(i + 1).exp - 1);
            nw.append_range(w, i + 2, w.run_count());
            auto it = work.find(nw);
            if (it == work.end()) {
                work.emplace(std::move(nw), c * rc);
            } else {
                it->second += c * rc;
                if (it->second.is_zero()) work.erase(it);
            }
        }
    }
    return out;
}

NcPoly Presentation::normal_form(const NcPoly& x) const { return normal_form_impl(x, false); }

NcPoly Presentation::nf_word(const Word& w, const FieldElement& c) const {
    return normal_form(NcPoly::from_word(this, w, c));
}

NcPoly Presentation::multiply(const NcPoly& a, const NcPoly& b) const {
    NcPoly raw(this);
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) raw.add_term(Word::concat(u, v), cu * cv);
    return normal_form(raw);
}

NcPoly Presentation::poly_pow(const NcPoly& a, int e) const {
    NcPoly acc = NcPoly::unit(this);
    for (int i = 0; i < e; ++i) acc = multiply(acc, a);
    return acc;
}

std::vector<Word> Presentation::basis_words(int max_len, const std::map<GenId, int>& aux_bounds) const {
    std::vector<Word> out;
    auto bound_for = [&](GenId g) {
        auto it = aux_bounds.find(g);
        return it == aux_bounds.end() ? max_len : it->second;
    };
    Word cur;
    auto dfs = [&](auto&& self, int len) -> void {
        out.push_back(cur);
        for (GenId g = 0; g < gens_.size(); ++g) {
            if (!cur.empty() && rule_table_[cur.back().gen][g] >= 0) continue;
            if (gens_[g].invertible) {
                if (cur.total_exp(g) + 1 > bound_for(g)) continue;
            } else if (len + 1 > max_len) {
                continue;
            }
            Word saved = cur;
            cur.append(g, 1);
            self(self, len + (gens_[g].invertible ? 0 : 1));
            cur = std::move(saved);
        }
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end(),
              [this](const Word& a, const Word& b) { return canonical_word_less(*this, a, b); });
    return out;
}

ConfluenceReport Presentation::check_confluence(int max_overlap_len) const {
    if (max_overlap_len < 3) throw domain_error("max_overlap_len must be at least 3");
    ConfluenceReport rep;

    // Overlap ambiguities g*h*k with rules on g*h and h*k, reduced both ways.
    for (const auto& r1 : rules_) {
        for (const auto& r2 : rules_) {
            if (r1.h != r2.g) continue;
            ++rep.critical_pairs;
            NcPoly left = multiply(r1.rhs, NcPoly::from_word(this, Word::letter(r2.h)));
            NcPoly right = multiply(NcPoly::from_word(this, Word::letter(r1.g)), r2.rhs);
            if (!(left == right)) {
                Word overlap = Word::letter(r1.g);
                overlap.append(r1.h, 1);
                overlap.append(r2.h, 1);
                rep.unresolved.push_back(
                    {overlap, "critical-pair", left.to_string(), right.to_string()});
            }
        }
    }

    // Exhaustive small-word cross-check: leftmost and rightmost reduction
    // strategies must agree on every word up to the bound.
    std::vector<Word> frontier{Word::one()};
    for (int len = 1; len <= max_overlap_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (GenId g = 0; g < gens_.size(); ++g) {
                Word nw = w;
                nw.append(g, 1);
                ++rep.words_checked;
                NcPoly l = normal_form_impl(NcPoly::from_word(this, nw), false);
                NcPoly r = normal_form_impl(NcPoly::from_word(this, nw), true);
                if (!(l == r))
                    rep.unresolved.push_back({nw, "two-strategy", l.to_string(), r.to_string()});
                next.push_back(std::move(nw));
            }
        }
        frontier = std::move(next);
    }
    return rep;
}

NcPoly Presentation::involution(const NcPoly& x) const {
    if (involution_.empty())
        throw domain_error("presentation '" + name_ + "' carries no involution");
    NcPoly out(this);
    for (const auto& [w, c] : x.terms()) {
        NcPoly term = NcPoly::unit(this, c);  // parameters are real: coefficients are fixed
        const auto& runs = w.runs();
        for (auto it = runs.rbegin(); it != runs.rend(); ++it)
            term = multiply(term, poly_pow(involution_[it->gen], it->exp));
        out += term;
    }
    return out;
}

std::string Presentation::render_word(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& r : w.runs()) {
        if (!s.empty()) s += "*";
        const Generator& g = gens_[r.gen];
        // an inverse generator displayed as base^-1 turns base^-1^k into base^-k
        if (r.exp == 1) {
            s += g.display;
        } else if (g.display.size() > 3 && g.display.ends_with("^-1")) {
            s += g.display.substr(0, g.display.size() - 3) + "^-" + std::to_string(r.exp);
        } else {
            s += g.display + "^" + std::to_string(r.exp);
        }
    }
    return s;
}

Word Presentation::make_word(std::initializer_list<std::pair<const char*, int>> letters) const {
    Word w;
    for (const auto& [name, exp] : letters) w.append(gen(name), exp);
    return w;
}

NcPoly Presentation::make_poly(
    std::initializer_list<std::pair<std::vector<std::pair<const char*, int>>, FieldElement>> terms) const {
    NcPoly x(this);
    for (const auto& [letters, c] : terms) {
        Word w;
        for (const auto& [name, exp] : letters) w.append(gen(name), exp);
        x.add_term(w, c);
    }
    return x;
}

}  // namespace qhopf
