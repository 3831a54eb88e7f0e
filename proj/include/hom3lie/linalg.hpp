#pragma once

#include <map>
#include <vector>

#include "hom3lie/matrix.hpp"

namespace hom3lie {

/// Rank over the rationals. rank(m) + nullspace(m).size() == m.cols().
int rank(const Matrix& m);

/// Basis of {v : m v = 0} in echelon-derived canonical form: the free
/// coordinates are set to 1 one at a time (in increasing column order), pivot
/// coordinates are filled from the reduced echelon form. Empty when the
/// kernel is trivial.
std::vector<Vec> nullspace(const Matrix& m);

/// rank of the row span of a list of vectors (all of equal length).
int rank_of_rows(const std::vector<Vec>& rows);

/// True when v lies in the span of the rows.
bool in_span(const std::vector<Vec>& rows, const Vec& v);

/// Sparse linear system over the rationals; rows accumulate as maps
/// column -> coefficient. Used by the cochain solvers, whose constraint
/// matrices are large but mostly empty.
class SparseSystem {
public:
    explicit SparseSystem(std::size_t ncols) : ncols_(ncols) {}

    using Row = std::map<std::size_t, Rational>;

    void add_row(Row row);
    std::size_t cols() const { return ncols_; }
    std::size_t row_count() const { return rows_.size(); }

    /// Kernel basis in the same canonical form as nullspace(Matrix).
    std::vector<Vec> kernel() const;

private:
    std::size_t ncols_;
    std::vector<Row> rows_;
};

} // namespace hom3lie
