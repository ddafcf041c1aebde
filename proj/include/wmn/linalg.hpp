#pragma once

#include <vector>

#include "wmn/rational.hpp"

namespace wmn {

/// Row-echelon span over exact rationals, built incrementally.
/// Rows are kept reduced (each pivot column is cleared in all other rows),
/// so membership tests and rank queries are exact.
class RowSpan {
public:
    explicit RowSpan(int cols) : cols_(cols) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    // reduce v against the current span; returns the residue
    VecQ reduce(VecQ v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rat& c = v(pivots_[r]);
            if (c != 0) v -= c * rows_[r];
        }
        return v;
    }

    bool contains(const VecQ& v) const { return reduce(v).isZero(); }

    // insert a vector; returns true if it enlarged the span
    bool insert(VecQ v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < cols_; ++j) if (v(j) != 0) { p = j; break; }
        if (p < 0) return false;
        v /= v(p);
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rat& c = rows_[r](p);
            if (c != 0) rows_[r] -= c * v;
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    const std::vector<VecQ>& rows() const { return rows_; }

    MatQ basis_matrix() const {
        MatQ b(rank(), cols_);
        for (int r = 0; r < rank(); ++r) b.row(r) = rows_[r].transpose();
        return b;
    }

private:
    int cols_;
    std::vector<VecQ> rows_;
    std::vector<int> pivots_;
};

inline int rank_of(const MatQ& a) {
    RowSpan s(static_cast<int>(a.cols()));
    for (int r = 0; r < a.rows(); ++r) s.insert(a.row(r).transpose());
    return s.rank();
}

// basis of the right kernel {v : a v = 0}, as columns of the result
inline MatQ kernel_basis(const MatQ& a) {
    const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    MatQ w = a;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) if (w(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        w.row(p).swap(w.row(r));
        w.row(r) /= w(r, c);
        for (int i = 0; i < rows; ++i)
            if (i != r && w(i, c) != 0) w.row(i) -= w(i, c) * w.row(r);
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    MatQ k(cols, cols - r);
    k.setZero();
    int kc = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        k(c, kc) = 1;
        for (int pr = 0; pr < r; ++pr) k(pivot_col[pr], kc) = -w(pr, c);
        ++kc;
    }
    return k;
}

// solve a x = b exactly; empty optional-like flag via bool
inline bool solve_exact(const MatQ& a, const VecQ& b, VecQ& x) {
    const int rows = static_cast<int>(a.rows()), cols = static_cast<int>(a.cols());
    MatQ w(rows, cols + 1);
    w.leftCols(cols) = a;
    w.col(cols) = b;
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i) if (w(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        w.row(p).swap(w.row(r));
        w.row(r) /= w(r, c);
        for (int i = 0; i < rows; ++i)
            if (i != r && w(i, c) != 0) w.row(i) -= w(i, c) * w.row(r);
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i) if (w(i, cols) != 0) return false;
    x = VecQ::Zero(cols);
    for (int pr = 0; pr < r; ++pr) x(pivot_col[pr]) = w(pr, cols);
    return true;
}

} // namespace wmn
