#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace sseq {

using Int = mpz_class;

/// Dense matrix over Z with arbitrary-precision entries, row-major storage.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
    IntMatrix(int rows, int cols, std::initializer_list<long> entries);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator-() const;
    IntMatrix scaled(const Int& c) const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transpose() const;
    IntMatrix col(int j) const;
    IntMatrix cols_range(int j0, int ncols) const;
    /// Horizontal concatenation [this | o]; either side may have 0 columns.
    IntMatrix hstack(const IntMatrix& o) const;
    IntMatrix vstack(const IntMatrix& o) const;
    /// Copies `src` into this matrix with top-left corner at (i0, j0).
    void paste(int i0, int j0, const IntMatrix& src);
    IntMatrix submatrix(int i0, int j0, int nrows, int ncols) const;

    // in-place column operations (used by the normal-form routines)
    void swap_cols(int a, int b);
    void negate_col(int a);
    void addmul_col(int dst, int src, const Int& c);  // col[dst] += c * col[src]
    void swap_rows(int a, int b);
    void negate_row(int a);
    void addmul_row(int dst, int src, const Int& c);

    std::string to_string() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

struct HnfResult {
    IntMatrix h;  // column Hermite normal form, zero columns pushed right
    IntMatrix u;  // unimodular, h = m * u
};

/// Column-style Hermite normal form: h = m * u with u unimodular.
/// Pivots are positive, entries left of a pivot in its row lie in [0, pivot).
HnfResult hnf(const IntMatrix& m);

/// Same elimination without the left-of-pivot reduction: h is in column
/// echelon form (not canonical) but spans, pivots and the zero-column tail of
/// u are identical to hnf's. Cheaper; used for kernel computations.
HnfResult hnf_echelon(const IntMatrix& m);

struct SnfResult {
    IntMatrix d;  // diagonal, d1 | d2 | ..., nonnegative
    IntMatrix u;  // unimodular row transform
    IntMatrix v;  // unimodular column transform, u * m * v = d
};

SnfResult snf(const IntMatrix& m);

/// Integral solution x of a * x = b (column-wise), if one exists.
std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b);

}  // namespace sseq
