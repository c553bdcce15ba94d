#include "sseq/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sseq {

IntMatrix::IntMatrix(int rows, int cols, std::initializer_list<long> entries)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {
    if (entries.size() != e_.size()) throw std::invalid_argument("IntMatrix: entry count mismatch");
    size_t k = 0;
    for (long v : entries) e_[k++] = v;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : e_)
        if (x != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix::operator*: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Int& b = o.at(k, j);
                if (b != 0) mpz_addmul(r.at(i, j).get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            }
        }
    return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix::operator+: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("IntMatrix::operator-: shape mismatch");
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
    return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const {
    IntMatrix r(rows_, cols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = c * e_[k];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::col(int j) const { return cols_range(j, 1); }

IntMatrix IntMatrix::cols_range(int j0, int ncols) const {
    IntMatrix r(rows_, ncols);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(i, j0 + j);
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& o) const {
    if (cols_ == 0 && rows_ == 0) return o;
    if (o.cols_ == 0 && o.rows_ == 0) return *this;
    if (rows_ != o.rows_) throw std::invalid_argument("IntMatrix::hstack: row mismatch");
    IntMatrix r(rows_, cols_ + o.cols_);
    r.paste(0, 0, *this);
    r.paste(0, cols_, o);
    return r;
}

IntMatrix IntMatrix::vstack(const IntMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("IntMatrix::vstack: col mismatch");
    IntMatrix r(rows_ + o.rows_, cols_);
    r.paste(0, 0, *this);
    r.paste(rows_, 0, o);
    return r;
}

void IntMatrix::paste(int i0, int j0, const IntMatrix& src) {
    for (int i = 0; i < src.rows_; ++i)
        for (int j = 0; j < src.cols_; ++j) at(i0 + i, j0 + j) = src.at(i, j);
}

IntMatrix IntMatrix::submatrix(int i0, int j0, int nrows, int ncols) const {
    IntMatrix r(nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) r.at(i, j) = at(i0 + i, j0 + j);
    return r;
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::negate_col(int a) {
    for (int i = 0; i < rows_; ++i) at(i, a) = -at(i, a);
}

void IntMatrix::addmul_col(int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int i = 0; i < rows_; ++i) {
        const Int& s = at(i, src);
        if (s != 0) mpz_addmul(at(i, dst).get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    }
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::negate_row(int a) {
    for (int j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
}

void IntMatrix::addmul_row(int dst, int src, const Int& c) {
    if (c == 0) return;
    for (int j = 0; j < cols_; ++j) {
        const Int& s = at(src, j);
        if (s != 0) mpz_addmul(at(dst, j).get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
    }
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

namespace {

HnfResult hnf_impl(const IntMatrix& m, bool canonical) {
    HnfResult r{m, IntMatrix::identity(m.cols())};
    IntMatrix& h = r.h;
    IntMatrix& u = r.u;
    int k = 0;  // next pivot column
    for (int i = 0; i < m.rows() && k < m.cols(); ++i) {
        // gcd-reduce row i across columns >= k
        while (true) {
            int best = -1;
            for (int j = k; j < m.cols(); ++j) {
                if (h.at(i, j) == 0) continue;
                if (best < 0 || mpz_cmpabs(h.at(i, j).get_mpz_t(), h.at(i, best).get_mpz_t()) < 0) best = j;
                if (mpz_cmpabs_ui(h.at(i, best).get_mpz_t(), 1) == 0) break;  // unit pivot, cannot improve
            }
            if (best < 0) break;  // row is zero beyond k; no pivot in this row
            h.swap_cols(k, best);
            u.swap_cols(k, best);
            bool cleared = true;
            for (int j = k + 1; j < m.cols(); ++j) {
                if (h.at(i, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(i, k).get_mpz_t());
                h.addmul_col(j, k, -q);
                u.addmul_col(j, k, -q);
                if (h.at(i, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (h.at(i, k) == 0) continue;
        if (h.at(i, k) < 0) {
            h.negate_col(k);
            u.negate_col(k);
        }
        if (canonical) {
            // reduce entries of row i in earlier pivot columns to [0, pivot)
            for (int j = 0; j < k; ++j) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, j).get_mpz_t(), h.at(i, k).get_mpz_t());
                h.addmul_col(j, k, -q);
                u.addmul_col(j, k, -q);
            }
        }
        ++k;
    }
    return r;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) { return hnf_impl(m, true); }

HnfResult hnf_echelon(const IntMatrix& m) { return hnf_impl(m, false); }

SnfResult snf(const IntMatrix& m) {
    SnfResult r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
    IntMatrix& d = r.d;
    const int n = std::min(m.rows(), m.cols());
    for (int t = 0; t < n; ++t) {
        bool block_empty = false;
        while (true) {
            // move a minimal-magnitude nonzero entry of the remaining block to
            // (t,t); re-selecting every pass keeps the quotients (and hence the
            // entry growth) small
            int pi = -1, pj = -1;
            for (int i = t; i < d.rows(); ++i)
                for (int j = t; j < d.cols(); ++j) {
                    if (d.at(i, j) == 0) continue;
                    if (pi < 0 || mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                block_empty = true;
                break;
            }
            d.swap_rows(t, pi);
            r.u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            r.v.swap_cols(t, pj);
            bool clean = true;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.addmul_row(i, t, -q);
                r.u.addmul_row(i, t, -q);
                if (d.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                d.addmul_col(j, t, -q);
                r.v.addmul_col(j, t, -q);
                if (d.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // row t and column t are clear; enforce divisibility of the rest
            bool fixed = true;
            for (int i = t + 1; i < d.rows() && fixed; ++i)
                for (int j = t + 1; j < d.cols() && fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.addmul_col(t, j, 1);
                        r.v.addmul_col(t, j, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (block_empty) break;
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            r.u.negate_row(t);
        }
    }
    return r;
}

std::optional<IntMatrix> solve_columns(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_columns: row mismatch");
    HnfResult hr = hnf(a);
    // collect pivot positions of h
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    {
        int i = 0;
        for (int j = 0; j < hr.h.cols(); ++j) {
            while (i < hr.h.rows() && hr.h.at(i, j) == 0) ++i;
            if (i >= hr.h.rows()) break;
            pivots.emplace_back(i, j);
        }
    }
    IntMatrix y(a.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        IntMatrix rem = b.col(c);
        size_t next = 0;
        for (int i = 0; i < a.rows(); ++i) {
            if (next < pivots.size() && pivots[next].first == i) {
                auto [pi, pj] = pivots[next];
                Int q, rres;
                mpz_fdiv_qr(q.get_mpz_t(), rres.get_mpz_t(), rem.at(i, 0).get_mpz_t(), hr.h.at(pi, pj).get_mpz_t());
                if (rres != 0) return std::nullopt;
                y.at(pj, c) = q;
                for (int k = 0; k < a.rows(); ++k) rem.at(k, 0) -= q * hr.h.at(k, pj);
                ++next;
            } else if (rem.at(i, 0) != 0) {
                return std::nullopt;
            }
        }
    }
    return hr.u * y;
}

}  // namespace sseq
