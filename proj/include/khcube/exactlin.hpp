#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include <gmpxx.h>

#include "khcube/errors.hpp"

namespace khcube {

/// Sparse matrix over exact rationals. Only nonzero entries are stored;
/// indices are 0-based and checked against the declared shape.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nnz() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    /// Sets entry (r, c). Storing an exact zero erases the entry.
    void set(int r, int c, const mpq_class& value);
    mpq_class get(int r, int c) const;

    const std::map<std::pair<int, int>, mpq_class>& entries() const { return entries_; }

    SparseMatrix transposed() const;

    static SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, mpq_class> entries_;
};

/// Rank over Q, computed by exact elimination. Independent of row and
/// column ordering.
long rank_exact(const SparseMatrix& m);

/// Dimension of ker(d_out)/im(d_in) at the middle space of
///
///     Q^a --d_in--> Q^n --d_out--> Q^b
///
/// so d_in is (n x a) and d_out is (b x n). Requires d_out * d_in == 0.
long homology_dim(const SparseMatrix& d_out, const SparseMatrix& d_in);

} // namespace khcube
