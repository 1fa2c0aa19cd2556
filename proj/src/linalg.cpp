#include "fmethod/linalg.hpp"

#include <stdexcept>

namespace fmethod {

namespace {

// row -= factor * pivot
void axpy(SparseRow& row, const GaussScalar& factor, const SparseRow& pivot) {
    for (const auto& [col, v] : pivot) {
        auto [it, inserted] = row.try_emplace(col, GaussScalar());
        it->second -= factor * v;
        if (it->second.is_zero()) row.erase(it);
    }
}

// Transposes a column list into rows keyed by the caller's row ids.
std::map<int, SparseRow> transpose(const std::vector<SparseRow>& columns) {
    std::map<int, SparseRow> rows;
    for (int j = 0; j < static_cast<int>(columns.size()); ++j)
        for (const auto& [r, v] : columns[j])
            if (!v.is_zero()) rows[r][j] = v;
    return rows;
}

}  // namespace

void RowReducer::reduce(SparseRow& row) const {
    // Walk the row's columns in increasing order, clearing every entry that
    // sits on an existing pivot.
    auto it = row.begin();
    while (it != row.end()) {
        auto piv = pivots_.find(it->first);
        if (piv == pivots_.end()) {
            ++it;
            continue;
        }
        const int col = it->first;
        GaussScalar factor = it->second;
        axpy(row, factor, piv->second);
        it = row.upper_bound(col);
    }
}

bool RowReducer::add_row(SparseRow row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->first < 0 || it->first >= ncols_) throw std::out_of_range("row column out of range");
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    reduce(row);
    if (row.empty()) return false;
    const int lead = row.begin()->first;
    GaussScalar inv = row.begin()->second.inverse();
    for (auto& [c, v] : row) v *= inv;
    pivots_.emplace(lead, std::move(row));
    reduced_ = false;
    return true;
}

const std::map<int, SparseRow>& RowReducer::rref() {
    if (reduced_) return pivots_;
    // Back substitution: clear every pivot column from the other pivot rows,
    // working from the last pivot upwards.
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
        const int col = it->first;
        for (auto& [other_col, other] : pivots_) {
            if (other_col >= col) break;
            auto e = other.find(col);
            if (e == other.end()) continue;
            GaussScalar factor = e->second;
            axpy(other, factor, it->second);
        }
    }
    reduced_ = true;
    return pivots_;
}

std::vector<std::vector<GaussScalar>> RowReducer::nullspace() {
    const auto& rows = rref();
    std::vector<std::vector<GaussScalar>> basis;
    for (int f = 0; f < ncols_; ++f) {
        if (rows.count(f)) continue;
        std::vector<GaussScalar> v(ncols_);
        v[f] = GaussScalar(1);
        for (const auto& [pc, row] : rows) {
            auto e = row.find(f);
            if (e != row.end()) v[pc] = -e->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<GaussScalar>> nullspace_of_columns(const std::vector<SparseRow>& columns) {
    RowReducer red(static_cast<int>(columns.size()));
    for (auto& [r, row] : transpose(columns)) {
        red.add_row(row);
        if (red.rank() == red.ncols()) break;
    }
    return red.nullspace();
}

bool solve_columns(const std::vector<SparseRow>& columns, const SparseRow& target,
                   std::vector<GaussScalar>& solution) {
    const int nc = static_cast<int>(columns.size());
    // Augmented system [A | b]; column nc carries the right-hand side.
    std::vector<SparseRow> aug(columns);
    aug.push_back(target);
    RowReducer red(nc + 1);
    for (auto& [r, row] : transpose(aug)) red.add_row(row);
    const auto& rows = red.rref();
    if (rows.count(nc)) return false;
    solution.assign(nc, GaussScalar());
    for (const auto& [pc, row] : rows) {
        auto e = row.find(nc);
        if (e != row.end()) solution[pc] = e->second;
    }
    return true;
}

namespace {

// Assigns dense ids to monomial keys on first sight.
struct KeyIndex {
    std::map<Exps, int> ids;
    int operator()(const Exps& k) { return ids.try_emplace(k, static_cast<int>(ids.size())).first->second; }
};

}  // namespace

std::vector<PolyVec> poly_kernel(const VarSpace& space, const std::vector<WeylOp>& ops,
                                 const std::vector<Exps>& domain) {
    std::vector<SparseRow> columns(domain.size());
    std::vector<KeyIndex> index(ops.size());
    for (std::size_t j = 0; j < domain.size(); ++j) {
        PolyVec v = PolyVec::monomial(space, domain[j]);
        for (std::size_t o = 0; o < ops.size(); ++o) {
            // Row ids interleave the operators so images of different ops never collide.
            const PolyVec image = apply(ops[o], v);
            for (const auto& [k, c] : image.terms())
                columns[j][index[o](k) * static_cast<int>(ops.size()) + static_cast<int>(o)] = c;
        }
    }
    std::vector<PolyVec> out;
    for (const auto& vec : nullspace_of_columns(columns)) {
        PolyVec p(space);
        for (std::size_t j = 0; j < vec.size(); ++j)
            if (!vec[j].is_zero()) p.add_term(domain[j], vec[j]);
        out.push_back(std::move(p));
    }
    return out;
}

int span_rank(const std::vector<PolyVec>& vecs) {
    KeyIndex index;
    std::vector<SparseRow> rows;
    for (const auto& v : vecs) {
        SparseRow r;
        for (const auto& [k, c] : v.terms()) r[index(k)] = c;
        rows.push_back(std::move(r));
    }
    RowReducer red(static_cast<int>(index.ids.size()));
    for (auto& r : rows) red.add_row(std::move(r));
    return red.rank();
}

bool in_span(const std::vector<PolyVec>& basis, const PolyVec& v) {
    std::vector<PolyVec> all(basis);
    int before = span_rank(all);
    all.push_back(v);
    return span_rank(all) == before;
}

}  // namespace fmethod
