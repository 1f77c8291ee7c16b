#pragma once

#include "qhopf/embedding.hpp"
#include "qhopf/linalg.hpp"

#include <set>

namespace qhopf {

/// A finite working window: words of bounded length with bounded exponents on
/// invertible generators.
struct Window {
    int max_len = 0;
    std::map<GenId, int> aux_bounds;

    bool contains(const Presentation& P, const Word& w) const;
    Window expanded(int extra) const;
};

/// Truncated right-ideal span: the exact row-reduced basis of J intersected
/// with the window, computed from below by right-multiplying the generators
/// with words reaching into a buffer zone.  The stabilized flag records that
/// growing the buffer once more did not change the dimension.
class IdealSpan {
public:
    static IdealSpan build(PresentationPtr H, HopfPtr hopf, std::vector<NcPoly> gens, Window window,
                           int buffer = 2);

    const Presentation* H() const { return H_.get(); }
    PresentationPtr H_ptr() const { return H_; }
    HopfPtr hopf() const { return hopf_; }
    const Window& window() const { return window_; }
    const std::vector<NcPoly>& gens() const { return gens_; }
    const WordTable& table() const { return table_; }
    const Eliminator& rref() const { return rref_; }

    int dim() const { return rref_.rank(); }
    bool stabilized() const { return stabilized_; }
    int buffer_used() const { return buffer_used_; }

    bool contains(const NcPoly& x) const;
    std::vector<NcPoly> basis() const;
    /// Dimension of the span restricted to words of length <= len.
    int dim_at_length(int len) const;

private:
    PresentationPtr H_;
    HopfPtr hopf_;
    std::vector<NcPoly> gens_;
    Window window_;
    WordTable table_;
    Eliminator rref_;
    bool stabilized_ = false;
    int buffer_used_ = 0;
};

/// eps(j) = 0 and Delta(j) in J (x) F + F (x) J for every basis element,
/// the membership tested by reducing both slots modulo J.
AxiomReport verify_coideal(const IdealSpan& J);

/// The filtered quotient coalgebra C = H/J: representative words (non-pivot
/// columns), the projection pi, the induced coproduct and counit, and the
/// right actions rho_0 and rho of the bundle construction.
class QuotientCoalgebra {
public:
    explicit QuotientCoalgebra(IdealSpan J);

    const Presentation* H() const { return J_.H(); }
    const HopfStructure& hopf() const { return *J_.hopf(); }
    const IdealSpan& ideal() const { return J_; }
    const Window& window() const { return J_.window(); }
    const WordTable& table() const { return J_.table(); }

    const std::vector<Word>& reps() const { return reps_; }
    bool is_rep(const Word& w) const;
    int rep_count() const { return static_cast<int>(reps_.size()); }
    int rep_id(const Word& w) const;
    /// Representatives of length <= len.
    std::vector<Word> reps_at(int len) const;

    SlotTag htag() const { return SlotTag{H(), nullptr}; }
    SlotTag ctag() const { return SlotTag{H(), this}; }

    /// pi of a basis word / polynomial: canonical representative combination.
    NcPoly pi_word(const Word& w) const;
    NcPoly pi(const NcPoly& x) const;

    /// Delta_R = (id (x) pi) Delta: H -> H (x) C.
    Tensor2 coaction_R(const NcPoly& u) const;
    Tensor2 coaction_R_word(const Word& w) const;

    /// Induced coproduct and counit on C, in representative coordinates.
    Tensor2 deltaC_rep(const Word& rep) const;
    bool deltaC_available(const Word& rep) const;
    Tensor2 deltaC(const NcPoly& cvec) const;
    FieldElement epsC(const NcPoly& cvec) const;

    /// rho_0(a, u) = pi(v a u) for the recorded representative; throws when
    /// the product degree is not covered.
    NcPoly rho0(const NcPoly& a_cvec, const NcPoly& u) const;
    NcPoly rho0_word(const Word& rep, const Word& u) const;
    /// rho(u (x) a, v) = u v_(1) (x) rho_0(a, v_(2)).
    Tensor2 rho(const Tensor2& s, const NcPoly& v) const;

    /// Exact solution basis of Delta_R(u) = u (x) pi(1) over words of length
    /// <= N, optionally restricted to a d-degree block / even-length words.
    std::vector<NcPoly> coinvariants(int N, std::optional<int> d_degree = std::nullopt,
                                     bool even_lengths_only = false) const;

    /// Section, counit, Delta_C pi = (pi (x) pi) Delta and coassociativity of
    /// the induced structure, checked on words of length <= max_len.
    AxiomReport verify_structure(int max_len) const;

    /// rho_0 representative independence, equivalently pi(j u) = 0 for the
    /// stored J-basis elements and cofactor words within the given caps.
    AxiomReport verify_rho0_well_defined(int max_j_len, int max_u_len, int aux_cap) const;

    /// Action axioms: associativity, the two bundle conditions, and closure
    /// of coinvariants under multiplication (coinvariants supplied by the
    /// caller, usually from a block solve).
    AxiomReport verify_rho_axioms(int max_len, int aux_cap,
                                  const std::vector<NcPoly>& coinvariant_basis) const;

private:
    IdealSpan J_;
    std::vector<Word> reps_;
    std::map<Word, int, WordLess> rep_index_;
    std::vector<NcPoly> pi_cache_;      // per table word id
    std::vector<Tensor2> deltaC_reps_;  // per rep id, C (x) C
    std::vector<FieldElement> epsC_reps_;
    std::set<int> boundary_reps_;       // coproduct not covered at this truncation
};

}  // namespace qhopf
