#pragma once

#include "qhopf/quotient.hpp"

namespace qhopf {

/// can: u (x) v -> u_(1) (x) u_(2) v on H (x) H.
Tensor2 can_map(const NcPoly& u, const NcPoly& v, const HopfStructure& H);
Tensor2 can_map(const Tensor2& t, const HopfStructure& H);

/// Inverse route u (x) v -> u_(1) (x) S(u_(2)) v; requires the antipode.
Tensor2 can_inverse(const NcPoly& u, const NcPoly& v, const HopfStructure& H);
Tensor2 can_inverse(const Tensor2& t, const HopfStructure& H);

/// chi: u (x) v -> u v_(0) (x) v_(1) in H (x) C.
Tensor2 chi_map(const NcPoly& u, const NcPoly& v, const QuotientCoalgebra& Q);

/// S(v_(1)) (x) v_(2) for the recorded representative of a; certified to hit
/// 1 (x) a under chi (throws with the residual otherwise).
Tensor2 chi_surjectivity_witness(const Word& rep, const QuotientCoalgebra& Q);

struct CanonicalMapMatrix {
    int domain_dim = 0;
    int rank = 0;
    int kernel_dim = 0;
    int relation_span_dim = 0;
    bool kernel_inside_relations = false;
    int unresolved_kernel_vectors = 0;
    std::string caveat;
};

/// Kernel of chi on F_N (x) F_N versus the B-relation subspace
/// span{u b (x) v - u (x) b v} built from coinvariants of degree <= M.
/// Exponents of invertible generators are capped separately.
CanonicalMapMatrix chi_kernel_analysis(const QuotientCoalgebra& Q, int N, int M, int aux_cap = 2);

/// The two containments that drive the bundle proof: (a) the shifted images
/// i(b) - eps(i(b)) lie in ker pi; (b) ker pi within F_N is spanned by left
/// multiples of coinvariants with vanishing counit.
AxiomReport verify_example_3_4_hypothesis(const QuotientCoalgebra& Q, const Embedding& emb, int N,
                                          int buffer = 2);

/// Route check of diagram (2-1): (id (x) i) chi_L = can (i (x) i) on basis
/// pairs of bounded length.
AxiomReport verify_chi_L_diagram(const Embedding& emb, const HopfStructure& Hhopf, int max_len);

}  // namespace qhopf
