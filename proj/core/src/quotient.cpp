#include "qhopf/quotient.hpp"

#include <algorithm>

#include "qhopf/errors.hpp"

namespace qhopf {

bool Window::contains(const Presentation& P, const Word& w) const {
    if (P.length(w) > max_len) return false;
    for (const auto& r : w.runs()) {
        if (!P.generator(r.gen).invertible) continue;
        auto it = aux_bounds.find(r.gen);
        int bound = it == aux_bounds.end() ? max_len : it->second;
        if (w.total_exp(r.gen) > bound) return false;
    }
    return true;
}

Window Window::expanded(int extra) const {
    Window w = *this;
    w.max_len += extra;
    for (auto& [g, b] : w.aux_bounds) b += extra;
    return w;
}

namespace {

struct SpanComputation {
    WordTable table;  // window words first (ids 0..k-1), buffer words after
    int window_size = 0;
    Eliminator elim;
    std::vector<SparseVec> window_rows;
};

SpanComputation compute_span(const Presentation& H, const std::vector<NcPoly>& gens,
                             const Window& window, int buffer) {
    Window big = window.expanded(buffer);
    std::vector<Word> all = H.basis_words(big.max_len, big.aux_bounds);
    std::vector<Word> inside, outside;
    for (const Word& w : all)
        (window.contains(H, w) ? inside : outside).push_back(w);
    SpanComputation out;
    out.window_size = static_cast<int>(inside.size());
    std::vector<Word> ordered = inside;
    ordered.insert(ordered.end(), outside.begin(), outside.end());
    out.table = WordTable(&H, std::move(ordered));

    for (const NcPoly& g : gens) {
        int glen = g.max_length();
        std::vector<Word> cof = H.basis_words(std::max(0, big.max_len - glen), big.aux_bounds);
        for (const Word& w : cof) {
            NcPoly prod = H.multiply(g, NcPoly::from_word(&H, w));
            bool in_big = true;
            for (const auto& [pw, pc] : prod.terms())
                if (!big.contains(H, pw) || out.table.id(pw) < 0) {
                    in_big = false;
                    break;
                }
            if (!in_big) continue;  // honest lower bound: drop rows leaving the buffer zone
            out.elim.insert(out.table.to_vec(prod));
        }
    }
    for (const auto& [lead, row] : out.elim.rows())
        if (lead < out.window_size) out.window_rows.push_back(row.main);
    return out;
}

}  // namespace

IdealSpan IdealSpan::build(PresentationPtr H, HopfPtr hopf, std::vector<NcPoly> gens, Window window,
                           int buffer) {
    for (const NcPoly& g : gens) {
        if (!hopf->counit(g).is_zero())
            throw domain_error("coideal generator has nonzero counit: " + g.to_string());
    }

    IdealSpan J;
    J.H_ = std::move(H);
    J.hopf_ = std::move(hopf);
    J.gens_ = std::move(gens);
    J.window_ = window;

    const Presentation& P = *J.H_;
    int b = buffer;
    bool stabilized = false;
    SpanComputation current = compute_span(P, J.gens_, window, b);
    for (;;) {
        SpanComputation next = compute_span(P, J.gens_, window, b + 1);
        if (next.window_rows.size() == current.window_rows.size()) {
            stabilized = true;
            current = std::move(next);
            break;
        }
        b *= 2;
        current = compute_span(P, J.gens_, window, b);
        if (b > 16) break;
    }
    J.stabilized_ = stabilized;
    J.buffer_used_ = b;

    // Re-express the intersection over the window's own table, pivots chosen
    // by the canonical word order (largest word of each row).
    J.table_ = WordTable(&P, P.basis_words(window.max_len, window.aux_bounds));
    for (const SparseVec& row : current.window_rows) {
        NcPoly x = current.table.to_poly(row);
        J.rref_.insert(J.table_.to_vec(x));
    }
    J.rref_.normalize();
    return J;
}

bool IdealSpan::contains(const NcPoly& x) const { return rref_.contains(table_.to_vec(x)); }

std::vector<NcPoly> IdealSpan::basis() const {
    std::vector<NcPoly> out;
    for (const auto& [lead, row] : rref_.rows()) out.push_back(table_.to_poly(row.main));
    return out;
}

int IdealSpan::dim_at_length(int len) const {
    // Rows whose every word has length <= len span J within that filtration
    // level (the table is graded, so leading words bound the rest).
    int n = 0;
    for (const auto& [lead, row] : rref_.rows())
        if (H_->length(table_.word(lead)) <= len) ++n;
    return n;
}

AxiomReport verify_coideal(const IdealSpan& J) {
    AxiomReport rep;
    const HopfStructure& hopf = *J.hopf();
    auto reduce_word = [&](const Word& w) {
        int id = J.table().id(w);
        if (id < 0)
            throw domain_error("coproduct slot " + J.H()->render_word(w) + " left the working window");
        return J.table().to_poly(J.rref().reduce(SparseVec{{id, FieldElement::one()}}));
    };
    for (const NcPoly& j : J.basis()) {
        ++rep.checks;
        if (!hopf.counit(j).is_zero())
            rep.failures.push_back({"counit-vanishes-on-ideal", j.to_string(), ""});
        // Delta(j) in J (x) F + F (x) J  <=>  (pi (x) pi) Delta(j) = 0, with pi
        // realized as reduction modulo the row basis.  Rows whose coproduct
        // leaves the window cannot be tested at this truncation.
        try {
            Tensor2 dj = hopf.coproduct(j);
            Tensor2 reduced = apply_slot(dj, 1, reduce_word, SlotTag{J.H(), nullptr});
            reduced = apply_slot(reduced, 2, reduce_word, SlotTag{J.H(), nullptr});
            ++rep.checks;
            if (!reduced.is_zero())
                rep.failures.push_back({"coproduct-lands-in-coideal", j.to_string(), reduced.to_string()});
        } catch (const domain_error&) {
            ++rep.skipped;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

QuotientCoalgebra::QuotientCoalgebra(IdealSpan J)
    : J_(std::move(J)), rep_index_(WordLess{J_.H()}) {
    const WordTable& tab = J_.table();
    for (int i = 0; i < tab.size(); ++i) {
        if (!J_.rref().is_pivot(i)) {
            rep_index_.emplace(tab.word(i), static_cast<int>(reps_.size()));
            reps_.push_back(tab.word(i));
        }
    }
    if (reps_.empty() || !reps_.front().empty())
        throw internal_error("quotient has no unit representative");

    pi_cache_.reserve(tab.size());
    for (int i = 0; i < tab.size(); ++i)
        pi_cache_.push_back(tab.to_poly(J_.rref().reduce(SparseVec{{i, FieldElement::one()}})));

    const HopfStructure& hopf = *J_.hopf();
    deltaC_reps_.reserve(reps_.size());
    epsC_reps_.reserve(reps_.size());
    for (const Word& r : reps_) {
        // Representatives at the very window boundary can have coproducts
        // reaching outside; they carry no induced-coproduct entry and any
        // attempt to use one reports the missing degree.
        try {
            Tensor2 d = hopf.coproduct_word(r);
            Tensor2 dc = apply_slot(d, 1, [this](const Word& w) { return pi_word(w); }, ctag());
            dc = apply_slot(dc, 2, [this](const Word& w) { return pi_word(w); }, ctag());
            deltaC_reps_.push_back(std::move(dc));
        } catch (const domain_error&) {
            deltaC_reps_.push_back(Tensor2(ctag(), ctag()));
            boundary_reps_.insert(rep_id(r));
        }
        epsC_reps_.push_back(hopf.counit_word(r));
    }
}

bool QuotientCoalgebra::deltaC_available(const Word& rep) const {
    int id = rep_id(rep);
    return id >= 0 && !boundary_reps_.count(id);
}

bool QuotientCoalgebra::is_rep(const Word& w) const { return rep_index_.count(w) > 0; }

int QuotientCoalgebra::rep_id(const Word& w) const {
    auto it = rep_index_.find(w);
    return it == rep_index_.end() ? -1 : it->second;
}

std::vector<Word> QuotientCoalgebra::reps_at(int len) const {
    std::vector<Word> out;
    for (const Word& r : reps_)
        if (H()->length(r) <= len) out.push_back(r);
    return out;
}

NcPoly QuotientCoalgebra::pi_word(const Word& w) const {
    int id = J_.table().id(w);
    if (id < 0)
        throw domain_error("pi undefined: word " + H()->render_word(w) + " (length " +
                           std::to_string(H()->length(w)) + ") is outside the covered window");
    return pi_cache_[id];
}

NcPoly QuotientCoalgebra::pi(const NcPoly& x) const {
    NcPoly out(H());
    for (const auto& [w, c] : x.terms()) out += pi_word(w).scaled(c);
    return out;
}

Tensor2 QuotientCoalgebra::coaction_R_word(const Word& w) const {
    Tensor2 d = J_.hopf()->coproduct_word(w);
    return apply_slot(d, 2, [this](const Word& u) { return pi_word(u); }, ctag());
}

Tensor2 QuotientCoalgebra::coaction_R(const NcPoly& u) const {
    Tensor2 out(htag(), ctag());
    for (const auto& [w, c] : u.terms()) out += coaction_R_word(w).scaled(c);
    return out;
}

Tensor2 QuotientCoalgebra::deltaC_rep(const Word& rep) const {
    int id = rep_id(rep);
    if (id < 0) throw domain_error("not a representative: " + H()->render_word(rep));
    if (boundary_reps_.count(id))
        throw domain_error("induced coproduct of " + H()->render_word(rep) +
                           " is not covered at this truncation");
    return deltaC_reps_[id];
}

Tensor2 QuotientCoalgebra::deltaC(const NcPoly& cvec) const {
    Tensor2 out(ctag(), ctag());
    for (const auto& [w, c] : cvec.terms()) out += deltaC_rep(w).scaled(c);
    return out;
}

FieldElement QuotientCoalgebra::epsC(const NcPoly& cvec) const {
    FieldElement out = FieldElement::zero();
    for (const auto& [w, c] : cvec.terms()) {
        int id = rep_id(w);
        if (id < 0) throw domain_error("not a representative: " + H()->render_word(w));
        out += c * epsC_reps_[id];
    }
    return out;
}

NcPoly QuotientCoalgebra::rho0_word(const Word& rep, const Word& u) const {
    return pi(H()->nf_word(Word::concat(rep, u)));
}

NcPoly QuotientCoalgebra::rho0(const NcPoly& a_cvec, const NcPoly& u) const {
    NcPoly out(H());
    for (const auto& [r, cr] : a_cvec.terms())
        for (const auto& [w, cw] : u.terms()) out += rho0_word(r, w).scaled(cr * cw);
    return out;
}

Tensor2 QuotientCoalgebra::rho(const Tensor2& s, const NcPoly& v) const {
    if (!(s.slot2() == ctag())) throw domain_error("rho expects an H (x) C tensor");
    Tensor2 out(htag(), ctag());
    const HopfStructure& hopf = *J_.hopf();
    for (const auto& [uv, c] : v.terms()) {
        Tensor2 dv = hopf.coproduct_word(uv);
        for (const auto& [k, ck] : s.terms()) {
            for (const auto& [dp, cd] : dv.terms()) {
                NcPoly left = H()->nf_word(Word::concat(k.first, dp.first));
                NcPoly right = rho0_word(k.second, dp.second);
                FieldElement coeff = c * ck * cd;
                for (const auto& [lw, lc] : left.terms())
                    for (const auto& [rw, rc] : right.terms()) out.add_term(lw, rw, coeff * lc * rc);
            }
        }
    }
    return out;
}

std::vector<NcPoly> QuotientCoalgebra::coinvariants(int N, std::optional<int> d_degree,
                                                    bool even_lengths_only) const {
    const Presentation& P = *H();
    const WordTable& tab = J_.table();
    std::vector<int> unknown_ids;
    for (int i = 0; i < tab.size(); ++i) {
        const Word& w = tab.word(i);
        if (P.length(w) > N) continue;
        if (d_degree && P.degree_d(w) != *d_degree) continue;
        if (even_lengths_only && P.length(w) % 2 != 0) continue;
        unknown_ids.push_back(i);
    }

    const int R = rep_count();
    Eliminator elim;
    std::vector<SparseVec> kernel;
    for (std::size_t k = 0; k < unknown_ids.size(); ++k) {
        const Word& w = tab.word(unknown_ids[k]);
        SparseVec constraint;
        // Words whose coaction leaves the window are dropped from the solve
        // space; a boundary effect of the truncation, never silent because
        // expected solutions are re-checked for membership by the callers.
        try {
            Tensor2 dr = coaction_R_word(w);
            for (const auto& [key, c] : dr.terms()) {
                int hid = tab.id(key.first);
                int rid = rep_id(key.second);
                if (hid < 0 || rid < 0) throw domain_error("coaction left the window");
                vec_add(constraint, hid * R + rid, c);
            }
        } catch (const domain_error&) {
            continue;
        }
        vec_add(constraint, unknown_ids[k] * R + 0, -FieldElement::one());  // minus w (x) pi(1)
        auto res = elim.insert(std::move(constraint), SparseVec{{static_cast<int>(k), FieldElement::one()}});
        if (!res.independent) kernel.push_back(std::move(res.aux));
    }

    // Canonical presentation of the solution space over the word coordinates.
    Eliminator pretty;
    for (const SparseVec& v : kernel) {
        SparseVec over_words;
        for (const auto& [k, c] : v) vec_add(over_words, unknown_ids[k], c);
        pretty.insert(std::move(over_words));
    }
    pretty.normalize();
    std::vector<NcPoly> out;
    for (const auto& [lead, row] : pretty.rows()) out.push_back(tab.to_poly(row.main));
    std::sort(out.begin(), out.end(), [&](const NcPoly& a, const NcPoly& b) {
        return canonical_word_less(P, a.terms().rbegin()->first, b.terms().rbegin()->first);
    });
    return out;
}

AxiomReport QuotientCoalgebra::verify_structure(int max_len) const {
    AxiomReport rep;
    const Presentation& P = *H();
    const HopfStructure& hopf = *J_.hopf();

    for (const Word& r : reps_) {
        if (P.length(r) > max_len) continue;
        ++rep.checks;
        NcPoly pr = pi_word(r);
        if (!(pr == NcPoly::from_word(&P, r)))
            rep.failures.push_back({"pi-section", P.render_word(r), pr.to_string()});
    }

    int skipped = 0;
    for (const Word& w : table().words()) {
        if (P.length(w) > max_len) continue;
        try {
            // Delta_C pi = (pi (x) pi) Delta
            Tensor2 d = hopf.coproduct_word(w);
            Tensor2 rhs = apply_slot(d, 1, [this](const Word& u) { return pi_word(u); }, ctag());
            rhs = apply_slot(rhs, 2, [this](const Word& u) { return pi_word(u); }, ctag());
            Tensor2 lhs = deltaC(pi_word(w));
            ++rep.checks;
            if (!(lhs == rhs)) rep.failures.push_back({"deltaC-compatible-with-pi", P.render_word(w), ""});
        } catch (const domain_error&) {
            ++skipped;  // coproduct leaves the window at the boundary
        }
        ++rep.checks;
        if (!(epsC(pi_word(w)) == hopf.counit_word(w)))
            rep.failures.push_back({"counit-factors-through-pi", P.render_word(w), ""});
    }
    rep.skipped += skipped;

    for (const Word& r : reps_) {
        if (P.length(r) > max_len) continue;
        try {
            Tensor2 dc = deltaC_rep(r);
            Tensor3 l = apply_slot_expand(dc, 1, [this](const Word& u) { return deltaC_rep(u); });
            Tensor3 rr = apply_slot_expand(dc, 2, [this](const Word& u) { return deltaC_rep(u); });
            ++rep.checks;
            if (!(l == rr)) rep.failures.push_back({"deltaC-coassociative", P.render_word(r), ""});
            ++rep.checks;
            NcPoly left = apply_slot_scalar(dc, 1, [this](const Word& u) { return epsC_reps_[rep_id(u)]; });
            NcPoly right = apply_slot_scalar(dc, 2, [this](const Word& u) { return epsC_reps_[rep_id(u)]; });
            NcPoly expect = NcPoly::from_word(&P, r);
            if (!(left == expect) || !(right == expect))
                rep.failures.push_back({"deltaC-counit", P.render_word(r), ""});
        } catch (const domain_error&) {
            ++rep.skipped;
        }
    }
    return rep;
}

AxiomReport QuotientCoalgebra::verify_rho0_well_defined(int max_j_len, int max_u_len,
                                                        int aux_cap) const {
    AxiomReport rep;
    const Presentation& P = *H();
    // Changing the representative of a class by j in J changes pi(v u) by
    // pi(j u); representative independence is exactly pi(J u) = 0.
    std::map<GenId, int> bounds;
    for (GenId g = 0; g < P.gen_count(); ++g)
        if (P.generator(g).invertible) bounds[g] = aux_cap;
    std::vector<Word> cofactors = P.basis_words(max_u_len, bounds);
    for (const NcPoly& j : J_.basis()) {
        if (j.max_length() > max_j_len) continue;
        bool in_cap = true;
        for (const auto& [w, c] : j.terms())
            for (const auto& r : w.runs())
                if (P.generator(r.gen).invertible && w.total_exp(r.gen) > aux_cap + 1) in_cap = false;
        if (!in_cap) continue;
        for (const Word& u : cofactors) {
            ++rep.checks;
            NcPoly img;
            try {
                img = pi(P.multiply(j, NcPoly::from_word(&P, u)));
            } catch (const domain_error&) {
                continue;  // product left the window; outside the witnessed range
            }
            if (!img.is_zero()) {
                rep.failures.push_back(
                    {"rho0-representative-independence", j.to_string() + " * " + P.render_word(u), ""});
                break;
            }
        }
    }
    return rep;
}

AxiomReport QuotientCoalgebra::verify_rho_axioms(int max_len, int aux_cap,
                                                 const std::vector<NcPoly>& coinvariant_basis) const {
    AxiomReport rep;
    const Presentation& P = *H();
    std::map<GenId, int> bounds;
    for (GenId g = 0; g < P.gen_count(); ++g)
        if (P.generator(g).invertible) bounds[g] = aux_cap;
    std::vector<Word> words = P.basis_words(max_len, bounds);

    // Condition (1): rho(u (x) 1, v) = u v_(0) (x) v_(1).
    for (const Word& u : words) {
        for (const Word& v : words) {
            ++rep.checks;
            Tensor2 lhs = rho(tensor_product(NcPoly::from_word(&P, u), pi_word(Word::one()), htag(), ctag()),
                              NcPoly::from_word(&P, v));
            Tensor2 rhs = left_multiply_slot(NcPoly::from_word(&P, u), coaction_R_word(v), 1);
            if (!(lhs == rhs)) {
                rep.failures.push_back({"rho-condition-1", P.render_word(u) + " , " + P.render_word(v), ""});
            }
        }
    }

    // Condition (2): rho (Delta_R (x) id) = Delta_R m, on pairs with covered product.
    for (const Word& u : words) {
        for (const Word& v : words) {
            if (P.length(u) + P.length(v) > window().max_len) continue;
            ++rep.checks;
            Tensor2 lhs = rho(coaction_R_word(u), NcPoly::from_word(&P, v));
            Tensor2 rhs = coaction_R(P.nf_word(Word::concat(u, v)));
            if (!(lhs == rhs))
                rep.failures.push_back({"rho-condition-2", P.render_word(u) + " , " + P.render_word(v), ""});
        }
    }

    // Action associativity on triples of short words.
    for (const Word& u : words) {
        if (P.length(u) > 1) continue;
        for (const Word& v : words) {
            if (P.length(v) > 1) continue;
            for (const Word& w : words) {
                if (P.length(w) > 1) continue;
                ++rep.checks;
                Tensor2 s = tensor_product(NcPoly::from_word(&P, u), pi_word(Word::one()), htag(), ctag());
                Tensor2 lhs = rho(rho(s, NcPoly::from_word(&P, v)), NcPoly::from_word(&P, w));
                Tensor2 rhs = rho(s, P.nf_word(Word::concat(v, w)));
                if (!(lhs == rhs))
                    rep.failures.push_back({"rho-associativity",
                                            P.render_word(u) + "," + P.render_word(v) + "," + P.render_word(w),
                                            ""});
            }
        }
    }

    // Coinvariants form a subalgebra: products of solver output stay coinvariant.
    for (const NcPoly& b1 : coinvariant_basis) {
        for (const NcPoly& b2 : coinvariant_basis) {
            if (b1.max_length() + b2.max_length() > window().max_len) continue;
            ++rep.checks;
            NcPoly prod = P.multiply(b1, b2);
            Tensor2 lhs = coaction_R(prod);
            Tensor2 rhs = tensor_product(prod, pi_word(Word::one()), htag(), ctag());
            if (!(lhs == rhs))
                rep.failures.push_back({"coinvariants-closed-under-product", b1.to_string(), b2.to_string()});
        }
    }
    return rep;
}

}  // namespace qhopf
