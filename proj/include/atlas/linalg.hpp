#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "atlas/field.hpp"

namespace atlas {

using Vec = std::vector<FieldScalar>;

/// Dense row-major matrix over the scalar field.
class Mat {
public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = FieldScalar::one();
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    FieldScalar& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const FieldScalar& operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const FieldScalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const FieldScalar& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j).add_mul(aik, bkj);
                }
            }
        return r;
    }
    friend Mat operator*(const FieldScalar& s, const Mat& a) {
        Mat r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
        return r;
    }
    friend Mat operator-(const Mat& a) { return FieldScalar(-1) * a; }

    Vec apply(const Vec& v) const {
        Vec out(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                const FieldScalar& m = (*this)(i, j);
                if (!m.is_zero()) out[i].add_mul(m, v[j]);
            }
        return out;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec flatten() const { return data_; }
    FieldScalar trace() const {
        FieldScalar t;
        for (size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<FieldScalar> data_;
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

inline FieldScalar dot(const Vec& a, const Vec& b) {
    FieldScalar s;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s.add_mul(a[i], b[i]);
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline Vec scale(const FieldScalar& s, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}
inline bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

/// Incrementally built echelonized span. add() reduces a vector against the
/// rows gathered so far and keeps it when independent; express() returns the
/// exact coordinates of a vector over the independent generators, or nullopt
/// if the vector lies outside the span. Rows are kept mutually reduced
/// (full RREF), so one reduction pass is exact in any row order.
class SpanBasis {
public:
    explicit SpanBasis(size_t dim) : dim_(dim) {}

    size_t rank() const { return rows_.size(); }
    size_t dim() const { return dim_; }

    /// Returns the index the vector received among independent generators,
    /// or -1 if it was already in the span.
    int add(const Vec& v) {
        Vec r = v;
        std::vector<FieldScalar> combo(basis_count_);
        reduce(r, &combo);
        size_t p = first_nonzero(r);
        if (p == dim_) return -1;
        int id = (int)basis_count_++;
        FieldScalar inv = r[p].inverse();
        for (auto& x : r) x *= inv;
        // new row = inv * (gen_id - sum combo[g] gen_g)
        std::vector<FieldScalar> expr(basis_count_);
        expr[id] = inv;
        for (size_t g = 0; g < combo.size(); ++g)
            if (!combo[g].is_zero()) expr[g] = -(inv * combo[g]);
        // keep full RREF: clear the new pivot column in all existing rows
        for (Row& row : rows_) {
            const FieldScalar f = row.vec[p];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j)
                if (!r[j].is_zero()) row.vec[j] -= f * r[j];
            row.expr.resize(basis_count_);
            for (size_t g = 0; g < expr.size(); ++g)
                if (!expr[g].is_zero()) row.expr[g] -= f * expr[g];
        }
        rows_.push_back(Row{p, std::move(r), std::move(expr)});
        return id;
    }

    /// Exact coordinates over the generators accepted by add(); nullopt when
    /// v is not in the span.
    std::optional<std::vector<FieldScalar>> express(const Vec& v) const {
        Vec r = v;
        std::vector<FieldScalar> combo(basis_count_);
        reduce(r, &combo);
        if (!vec_is_zero(r)) return std::nullopt;
        return combo;
    }

    bool contains(const Vec& v) const {
        Vec r = v;
        reduce(r, nullptr);
        return vec_is_zero(r);
    }

private:
    struct Row {
        size_t pivot;
        Vec vec;                         // pivot entry is one
        std::vector<FieldScalar> expr;   // coordinates over generator ids
    };

    size_t dim_;
    size_t basis_count_ = 0;
    std::vector<Row> rows_;

    size_t first_nonzero(const Vec& v) const {
        for (size_t i = 0; i < dim_; ++i)
            if (!v[i].is_zero()) return i;
        return dim_;
    }

    // r -= sum c_t row_t, accumulating generator coordinates into combo.
    void reduce(Vec& r, std::vector<FieldScalar>* combo) const {
        for (const Row& row : rows_) {
            const FieldScalar c = r[row.pivot];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j) {
                const FieldScalar& rv = row.vec[j];
                if (!rv.is_zero()) r[j] -= c * rv;
            }
            if (combo)
                for (size_t g = 0; g < row.expr.size(); ++g)
                    if (!row.expr[g].is_zero()) (*combo)[g].add_mul(c, row.expr[g]);
        }
    }
};

/// Row-reduce in place (full reduced row echelon form); returns pivot columns.
inline std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = m.rows();
        for (size_t r = row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) {
                sel = r;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t c = col; c < m.cols(); ++c) std::swap(m(row, c), m(sel, c));
        FieldScalar inv = m(row, col).inverse();
        for (size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            FieldScalar f = m(r, col);
            for (size_t c = col; c < m.cols(); ++c) {
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Forward elimination only, with pivots chosen to keep entries small;
/// the workhorse for ranks of large dense matrices.
inline size_t rank(Mat m) {
    auto score = [](const FieldScalar& x) {
        size_t s = 0;
        for (int c = 0; c < 8; ++c) {
            const Rational& r = x.coeff(c);
            if (r.is_zero()) continue;
            s += 2 + r.to_string().size();
        }
        return s;
    };
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t sel = m.rows();
        size_t best = SIZE_MAX;
        for (size_t r = row; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            size_t s = score(m(r, col));
            if (s < best) {
                best = s;
                sel = r;
                if (s <= 3) break;  // pivot like 1 or -1: good enough
            }
        }
        if (sel == m.rows()) continue;
        if (sel != row)
            for (size_t c = col; c < m.cols(); ++c) std::swap(m(row, c), m(sel, c));
        FieldScalar inv = m(row, col).inverse();
        for (size_t r = row + 1; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            FieldScalar f = m(r, col) * inv;
            m(r, col) = FieldScalar();
            for (size_t c = col + 1; c < m.cols(); ++c) {
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
            }
        }
        ++row;
    }
    return row;
}

inline size_t nullity(const Mat& m) { return m.cols() - rank(m); }

/// Basis of the right kernel {v : m v = 0}.
inline std::vector<Vec> kernel_basis(Mat m) {
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(m.cols());
        v[free_col] = FieldScalar::one();
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free_col);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace atlas
