#pragma once

#include <map>
#include <vector>

#include "qhopf/presentation.hpp"

namespace qhopf {

/// Sparse vector over integer coordinate ids; the largest id present acts as
/// the leading entry during elimination.
using SparseVec = std::map<int, FieldElement>;

void vec_add(SparseVec& v, int idx, const FieldElement& c);
void vec_axpy(SparseVec& v, const FieldElement& c, const SparseVec& w);  // v += c*w
SparseVec vec_scaled(const SparseVec& v, const FieldElement& c);

/// Incremental exact row reduction over the coefficient field.  Rows are
/// normalized to leading coefficient one and keyed by their leading id;
/// reduction of a query eliminates every coordinate that is a pivot, so the
/// result is the canonical representative supported on non-pivot ids.
class Eliminator {
public:
    struct Row {
        SparseVec main;
        SparseVec aux;
    };
    struct InsertResult {
        bool independent;
        SparseVec aux;  // dependency combination when not independent
    };

    InsertResult insert(SparseVec main, SparseVec aux = {});
    /// Reduce modulo the current row space (eliminates all pivot coordinates).
    SparseVec reduce(SparseVec v) const;
    std::pair<SparseVec, SparseVec> reduce_tracked(SparseVec v, SparseVec aux) const;
    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    int rank() const { return static_cast<int>(rows_.size()); }
    bool is_pivot(int idx) const { return rows_.count(idx) > 0; }
    const std::map<int, Row, std::greater<int>>& rows() const { return rows_; }
    std::vector<int> pivots() const;

    /// Back-substitute so every stored tail is pivot-free (full RREF).
    void normalize();

private:
    std::map<int, Row, std::greater<int>> rows_;
};

/// Deterministic id assignment for words (ids ascend with the canonical word
/// order when built from a sorted list).
class WordTable {
public:
    WordTable() = default;
    WordTable(const Presentation* pres, std::vector<Word> words);

    const Presentation* pres() const { return pres_; }
    const std::vector<Word>& words() const { return words_; }
    int size() const { return static_cast<int>(words_.size()); }
    int id(const Word& w) const;  // -1 when absent
    const Word& word(int id) const { return words_[id]; }

    SparseVec to_vec(const NcPoly& x) const;             // throws when a word is absent
    NcPoly to_poly(const SparseVec& v) const;

private:
    const Presentation* pres_ = nullptr;
    std::vector<Word> words_;
    std::map<Word, int, WordLess> index_{WordLess{nullptr}};
};

/// Exact determinant by fraction Gaussian elimination; consumes the matrix.
FieldElement determinant(std::vector<std::vector<FieldElement>> m);

}  // namespace qhopf
