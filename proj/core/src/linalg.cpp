#include "qhopf/linalg.hpp"

#include "qhopf/errors.hpp"

namespace qhopf {

void vec_add(SparseVec& v, int idx, const FieldElement& c) {
    if (c.is_zero()) return;
    auto it = v.find(idx);
    if (it == v.end()) {
        v.emplace(idx, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

void vec_axpy(SparseVec& v, const FieldElement& c, const SparseVec& w) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : w) vec_add(v, i, c * x);
}

SparseVec vec_scaled(const SparseVec& v, const FieldElement& c) {
    SparseVec out;
    if (c.is_zero()) return out;
    for (const auto& [i, x] : v) out.emplace(i, x * c);
    return out;
}

namespace {

bool vec_is_polynomial(const SparseVec& v) {
    for (const auto& [i, c] : v)
        if (c.has_ext() || !c.base().den.is_one()) return false;
    return true;
}

/// Clear denominators and the quadratic-extension mixing so that all entries
/// become plain polynomials (multiplying by a nonzero scalar only).
void vec_make_polynomial(SparseVec& v, SparseVec& aux) {
    // t-extension entries: multiplying by the conjugate clears t only with
    // entry-specific factors, so instead scale by denominators and keep any t
    // parts; arithmetic stays exact either way.
    FieldElement scale = FieldElement::one();
    for (const auto& [i, c] : v) {
        const LaurentPoly& den = c.base().num.is_zero() && c.has_ext() ? c.ext().den : c.base().den;
        if (!den.is_one()) scale = scale * FieldElement::from_poly(den);
        if (c.has_ext() && !c.ext().den.is_one() && !(c.ext().den == den))
            scale = scale * FieldElement::from_poly(c.ext().den);
    }
    if (!scale.is_one()) {
        for (auto& [i, c] : v) c = c * scale;
        for (auto& [i, c] : aux) c = c * scale;
    }
}

/// Divide main (and aux, to keep the pairing) by the polynomial content of
/// main; keeps fraction-free elimination from snowballing.
void vec_strip_content(SparseVec& v, SparseVec& aux) {
    if (v.empty() || !vec_is_polynomial(v)) return;
    LaurentPoly g = LaurentPoly::zero();
    for (const auto& [i, c] : v) {
        g = poly_gcd(g, c.base().num);
        if (g.is_one()) break;
    }
    // also strip any common q-power (units)
    Monomial shift{};
    if (!g.is_one()) {
        FieldElement inv = FieldElement::from_poly(g).inverse();
        for (auto& [i, c] : v) c = c * inv;
        for (auto& [i, c] : aux) c = c * inv;
    }
    (void)shift;
}

}  // namespace

std::pair<SparseVec, SparseVec> Eliminator::reduce_tracked(SparseVec v, SparseVec aux) const {
    // Work downward: eliminating the current largest pivot coordinate only
    // introduces smaller ones.  Against unnormalized rows the step is the
    // fraction-free cross-multiplication  v := lead(r) v - v[lead] r,
    // followed by a content strip; once rows are monic (after normalize())
    // this degenerates into the plain subtraction step.
    int steps_since_strip = 0;
    while (!v.empty()) {
        bool hit = false;
        for (auto it = v.rbegin(); it != v.rend(); ++it) {
            auto row = rows_.find(it->first);
            if (row == rows_.end()) continue;
            const Row& r = row->second;
            const FieldElement& rl = r.main.rbegin()->second;
            FieldElement vl = it->second;
            if (!rl.is_one()) {
                for (auto& [i, c] : v) c = c * rl;
                for (auto& [i, c] : aux) c = c * rl;
            }
            vec_axpy(v, -vl, r.main);
            vec_axpy(aux, -vl, r.aux);
            if (++steps_since_strip >= 4) {
                vec_strip_content(v, aux);
                steps_since_strip = 0;
            }
            hit = true;
            break;
        }
        if (!hit) break;
    }
    vec_strip_content(v, aux);
    return {std::move(v), std::move(aux)};
}

SparseVec Eliminator::reduce(SparseVec v) const { return reduce_tracked(std::move(v), {}).first; }

Eliminator::InsertResult Eliminator::insert(SparseVec main, SparseVec aux) {
    vec_make_polynomial(main, aux);
    auto [v, a] = reduce_tracked(std::move(main), std::move(aux));
    if (v.empty()) return {false, std::move(a)};
    rows_.emplace(v.rbegin()->first, Row{std::move(v), std::move(a)});
    return {true, {}};
}

std::vector<int> Eliminator::pivots() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [lead, row] : rows_) out.push_back(lead);
    return out;
}

void Eliminator::normalize() {
    // Ascending pivot order: smaller rows are monic and fully reduced by the
    // time larger tails get rewritten through them, so one pass suffices.
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        Row& r = it->second;
        FieldElement lead = r.main.rbegin()->second;
        if (!lead.is_one()) {
            FieldElement inv = lead.inverse();
            for (auto& [i, c] : r.main) c = c * inv;
            for (auto& [i, c] : r.aux) c = c * inv;
        }
        SparseVec tail = r.main;
        tail.erase(it->first);
        for (const auto& [idx, c] : tail) {
            auto p = rows_.find(idx);
            if (p == rows_.end()) continue;
            FieldElement k = -c;
            vec_axpy(r.main, k, p->second.main);
            vec_axpy(r.aux, k, p->second.aux);
        }
    }
}

WordTable::WordTable(const Presentation* pres, std::vector<Word> words)
    : pres_(pres), words_(std::move(words)), index_(WordLess{pres}) {
    for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], static_cast<int>(i));
    if (index_.size() != words_.size()) throw internal_error("duplicate words in table");
}

int WordTable::id(const Word& w) const {
    auto it = index_.find(w);
    return it == index_.end() ? -1 : it->second;
}

SparseVec WordTable::to_vec(const NcPoly& x) const {
    SparseVec v;
    for (const auto& [w, c] : x.terms()) {
        int i = id(w);
        if (i < 0)
            throw domain_error("word " + pres_->render_word(w) + " of length " +
                               std::to_string(pres_->length(w)) + " is outside the working window");
        v.emplace(i, c);
    }
    return v;
}

NcPoly WordTable::to_poly(const SparseVec& v) const {
    NcPoly x(pres_);
    for (const auto& [i, c] : v) {
        if (i < 0 || i >= static_cast<int>(words_.size()))
            throw internal_error("word table index out of range");
        x.add_term(words_[i], c);
    }
    return x;
}

FieldElement determinant(std::vector<std::vector<FieldElement>> m) {
    const std::size_t n = m.size();
    FieldElement det = FieldElement::one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return FieldElement::zero();
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        FieldElement inv = m[col][col].inverse();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col].is_zero()) continue;
            FieldElement f = m[row][col] * inv;
            for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

}  // namespace qhopf
