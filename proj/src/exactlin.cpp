#include "khcube/exactlin.hpp"

#include <string>
#include <vector>

namespace khcube {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw contract_error("SparseMatrix: negative shape");
}

void SparseMatrix::set(int r, int c, const mpq_class& value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw contract_error("SparseMatrix::set: index (" + std::to_string(r) + "," +
                             std::to_string(c) + ") outside " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    if (value == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = value;
}

mpq_class SparseMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? mpq_class(0) : it->second;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_)
        t.entries_[{rc.second, rc.first}] = v;
    return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols() != b.rows())
        throw contract_error("SparseMatrix::multiply: inner dimensions disagree");
    // b grouped by row so each a-entry scans one short list
    std::vector<std::vector<std::pair<int, mpq_class>>> brows(b.rows());
    for (const auto& [rc, v] : b.entries())
        brows[rc.first].emplace_back(rc.second, v);
    std::map<std::pair<int, int>, mpq_class> acc;
    for (const auto& [rc, v] : a.entries())
        for (const auto& [j, w] : brows[rc.second])
            acc[{rc.first, j}] += v * w;
    SparseMatrix out(a.rows(), b.cols());
    for (auto& [rc, v] : acc)
        if (v != 0)
            out.entries_[rc] = std::move(v);
    return out;
}

long rank_exact(const SparseMatrix& m) {
    std::vector<std::map<int, mpq_class>> rows(m.rows());
    for (const auto& [rc, v] : m.entries())
        rows[rc.first][rc.second] = v;

    // Incremental echelon form: pivot rows are kept normalized (leading 1)
    // and indexed by leading column.
    std::map<int, std::map<int, mpq_class>> pivots;
    long rank = 0;
    for (auto& row : rows) {
        while (!row.empty()) {
            const int lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                const mpq_class leadval = row.begin()->second;
                for (auto& [c, v] : row)
                    v /= leadval;
                pivots.emplace(lead, std::move(row));
                row.clear();
                ++rank;
                break;
            }
            const mpq_class factor = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto pos = row.find(c);
                if (pos == row.end()) {
                    row.emplace(c, -factor * v);
                } else {
                    pos->second -= factor * v;
                    if (pos->second == 0)
                        row.erase(pos);
                }
            }
        }
    }
    return rank;
}

long homology_dim(const SparseMatrix& d_out, const SparseMatrix& d_in) {
    if (d_out.cols() != d_in.rows())
        throw contract_error("homology_dim: middle dimension disagrees (" +
                             std::to_string(d_out.cols()) + " vs " +
                             std::to_string(d_in.rows()) + ")");
    if (!SparseMatrix::multiply(d_out, d_in).is_zero())
        throw internal_error("homology_dim: d_out * d_in != 0, not a chain complex");
    return d_out.cols() - rank_exact(d_out) - rank_exact(d_in);
}

} // namespace khcube
