#pragma once

// Exact Gaussian elimination over Q(i) on sparse rows.

#include "fmethod/scalar.hpp"
#include "fmethod/weyl.hpp"

#include <map>
#include <vector>

namespace fmethod {

using SparseRow = std::map<int, GaussScalar>;

/// Incremental row reduction. Rows are fed one at a time and reduced against
/// the pivots found so far; pivot rows are kept with a leading 1. Pivots are
/// chosen as the smallest column index present, so the result depends only
/// on the column order and the row set, not on the order rows arrive in
/// (after full reduction).
class RowReducer {
public:
    explicit RowReducer(int ncols) : ncols_(ncols) {}

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(pivots_.size()); }

    /// Returns true when the row was independent of the current pivots.
    bool add_row(SparseRow row);

    /// Reduced row echelon form of the accepted rows, keyed by pivot column.
    const std::map<int, SparseRow>& rref();

    /// Nullspace basis: one vector per free column f, with entry 1 at f,
    /// zero at the other free columns. Ordered by free column.
    std::vector<std::vector<GaussScalar>> nullspace();

private:
    void reduce(SparseRow& row) const;

    int ncols_;
    std::map<int, SparseRow> pivots_;
    bool reduced_ = true;
};

/// Nullspace of the linear map whose j-th column image is columns[j]
/// (a sparse vector indexed by arbitrary integer row ids).
std::vector<std::vector<GaussScalar>> nullspace_of_columns(const std::vector<SparseRow>& columns);

/// Solves sum_j x_j columns[j] = target; returns false when inconsistent.
/// Free variables are set to zero.
bool solve_columns(const std::vector<SparseRow>& columns, const SparseRow& target,
                   std::vector<GaussScalar>& solution);

// ---- polynomial vectors ----

/// Common kernel of `ops` on span(domain) (monomial keys). Basis vectors are
/// the RREF nullspace vectors, ordered by their free column.
std::vector<PolyVec> poly_kernel(const VarSpace& space, const std::vector<WeylOp>& ops,
                                 const std::vector<Exps>& domain);

/// Dimension of the span of the given vectors.
int span_rank(const std::vector<PolyVec>& vecs);

/// True when v lies in span(basis).
bool in_span(const std::vector<PolyVec>& basis, const PolyVec& v);

}  // namespace fmethod
