#include "hom3lie/linalg.hpp"

#include <algorithm>

namespace hom3lie {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(std::vector<Vec>& rows, int ncols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (int c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        Rational inv = rows[r][c];
        for (int j = c; j < ncols; ++j) rows[r][j] /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (int j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<Vec> matrix_rows(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Vec row(m.cols());
        for (int j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Vec> kernel_from_rref(const std::vector<Vec>& red, const std::vector<int>& pivots, int ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(ncols);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

int rank(const Matrix& m) {
    auto rows = matrix_rows(m);
    return int(rref(rows, m.cols()).size());
}

std::vector<Vec> nullspace(const Matrix& m) {
    auto rows = matrix_rows(m);
    auto pivots = rref(rows, m.cols());
    return kernel_from_rref(rows, pivots, m.cols());
}

int rank_of_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return 0;
    auto copy = rows;
    return int(rref(copy, int(rows.front().size())).size());
}

bool in_span(const std::vector<Vec>& rows, const Vec& v) {
    if (is_zero(v)) return true;
    auto copy = rows;
    int base = rank_of_rows(rows);
    copy.push_back(v);
    return rank_of_rows(copy) == base;
}

void SparseSystem::add_row(Row row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second == 0) it = row.erase(it);
        else ++it;
    }
    if (!row.empty()) rows_.push_back(std::move(row));
}

std::vector<Vec> SparseSystem::kernel() const {
    // Sparse forward elimination into echelon form keyed by pivot column.
    std::map<std::size_t, Row> echelon; // pivot col -> normalized row
    for (Row row : rows_) {
        while (!row.empty()) {
            std::size_t lead = row.begin()->first;
            auto it = echelon.find(lead);
            if (it == echelon.end()) break;
            Rational f = row.begin()->second;
            for (const auto& [c, val] : it->second) {
                auto jt = row.find(c);
                Rational nv = (jt == row.end() ? Rational(0) : jt->second) - f * val;
                if (nv == 0) {
                    if (jt != row.end()) row.erase(jt);
                } else {
                    row[c] = nv;
                }
            }
        }
        if (row.empty()) continue;
        Rational inv = row.begin()->second;
        for (auto& [c, val] : row) val /= inv;
        echelon.emplace(row.begin()->first, std::move(row));
    }
    // Back substitution: fully reduce above-pivot entries.
    for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
        std::size_t pc = it->first;
        for (auto jt = echelon.begin(); jt != echelon.end(); ++jt) {
            if (jt->first == pc) continue;
            auto kt = jt->second.find(pc);
            if (kt == jt->second.end()) continue;
            Rational f = kt->second;
            jt->second.erase(kt);
            for (const auto& [c, val] : it->second) {
                if (c == pc) continue;
                Rational nv = (jt->second.count(c) ? jt->second[c] : Rational(0)) - f * val;
                if (nv == 0) jt->second.erase(c);
                else jt->second[c] = nv;
            }
        }
    }
    std::vector<bool> is_pivot(ncols_, false);
    for (const auto& [pc, _] : echelon) is_pivot[pc] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < ncols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(ncols_);
        v[f] = 1;
        for (const auto& [pc, row] : echelon) {
            auto it = row.find(f);
            if (it != row.end()) v[pc] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hom3lie
