#pragma once

// Dense exact vectors, matrices and forms over Q(sqrt2): Gaussian elimination
// with full case discrimination, null spaces, signatures of symmetric forms,
// and alternating 2-/3-forms with the determinant evaluation convention
// (Za ^ Zb ^ Zc)(X, Y, W) = det[Z_i(arg_j)].

#include "g2syms/scalar.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace g2syms {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : e_(n) {}
    Vec(std::initializer_list<QSqrt2> xs) : e_(xs) {}

    static Vec unit(std::size_t n, std::size_t i) {
        Vec v(n);
        v[i] = 1;
        return v;
    }

    std::size_t size() const { return e_.size(); }
    QSqrt2& operator[](std::size_t i) { return e_[i]; }
    const QSqrt2& operator[](std::size_t i) const { return e_[i]; }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const QSqrt2& x) { return x.is_zero(); });
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        check_same(a, b);
        Vec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
        return r;
    }
    friend Vec operator-(const Vec& a, const Vec& b) {
        check_same(a, b);
        Vec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
        return r;
    }
    friend Vec operator-(const Vec& a) {
        Vec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
        return r;
    }
    friend Vec operator*(const QSqrt2& c, const Vec& a) {
        Vec r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
        return r;
    }
    Vec& operator+=(const Vec& o) { return *this = *this + o; }
    Vec& operator-=(const Vec& o) { return *this = *this - o; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

private:
    static void check_same(const Vec& a, const Vec& b) {
        if (a.size() != b.size()) throw DimensionMismatch("vector size mismatch");
    }
    std::vector<QSqrt2> e_;
};

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat from_columns(const std::vector<Vec>& cols) {
        if (cols.empty()) return Mat(0, 0);
        Mat m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_) throw DimensionMismatch("column size mismatch");
            for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }
    static Mat from_rows(const std::vector<Vec>& rows) { return from_columns(rows).transposed(); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    QSqrt2& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const QSqrt2& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    Vec row(std::size_t i) const {
        Vec v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const QSqrt2& x) { return x.is_zero(); });
    }

    QSqrt2 trace() const {
        QSqrt2 t(0);
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        check_same(a, b);
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    friend Mat operator-(const Mat& a) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = -a.e_[k];
        return r;
    }
    friend Mat operator*(const QSqrt2& c, const Mat& a) {
        Mat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = c * a.e_[k];
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend Vec operator*(const Mat& a, const Vec& x) {
        if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        Vec r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * x[j];
        return r;
    }
    Mat& operator+=(const Mat& o) { return *this = *this + o; }
    Mat& operator-=(const Mat& o) { return *this = *this - o; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    static void check_same(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix shape mismatch");
    }
    std::size_t rows_, cols_;
    std::vector<QSqrt2> e_;
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

inline Vec flatten(const Mat& m) {
    Vec v(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v[i * m.cols() + j] = m(i, j);
    return v;
}

inline Mat unflatten(const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw DimensionMismatch("unflatten: size mismatch");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

inline Mat flatten_columns(const std::vector<Mat>& mats) {
    std::vector<Vec> cols;
    cols.reserve(mats.size());
    for (const Mat& m : mats) cols.push_back(flatten(m));
    return Mat::from_columns(cols);
}

// Row echelon data for an exact matrix: reduced form, pivot columns, rank.
struct Echelon {
    Mat reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

inline Echelon reduced_row_echelon(Mat m) {
    Echelon out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        QSqrt2 inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            QSqrt2 f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const Mat& m) { return reduced_row_echelon(m).rank; }

// Basis of the null space {x : A x = 0}, one vector per free column.
inline std::vector<Vec> kernel(const Mat& a) {
    Echelon e = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(a.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

enum class SolveKind { Unique, None, Affine };

struct SolveResult {
    SolveKind kind = SolveKind::None;
    Vec particular;            // valid for Unique and Affine
    std::vector<Vec> nullspace;  // nonempty exactly for Affine
};

// Exact Gaussian elimination on [A | b] with full case discrimination.
inline SolveResult solve(const Mat& a, const Vec& b) {
    if (a.rows() != b.size()) throw DimensionMismatch("solve: rhs size mismatch");
    Mat aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    Echelon e = reduced_row_echelon(std::move(aug));
    SolveResult res;
    for (std::size_t c : e.pivot_cols)
        if (c == a.cols()) return res;  // a pivot in the rhs column: inconsistent
    res.particular = Vec(a.cols());
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
        res.particular[e.pivot_cols[k]] = e.reduced(k, a.cols());
    res.nullspace = kernel(a);
    res.kind = res.nullspace.empty() ? SolveKind::Unique : SolveKind::Affine;
    return res;
}

inline Mat inverse(const Mat& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
    std::size_t n = a.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = reduced_row_echelon(std::move(aug));
    if (e.rank != n || e.pivot_cols[n - 1] != n - 1)
        throw std::invalid_argument("matrix is singular");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

// ------------------------------------------------------------------ subspaces

// Basis of the span of the given vectors (subset in echelon order).
inline std::vector<Vec> span_basis(const std::vector<Vec>& gens) {
    if (gens.empty()) return {};
    Mat m = Mat::from_columns(gens);
    Echelon e = reduced_row_echelon(m);
    std::vector<Vec> basis;
    for (std::size_t c : e.pivot_cols) basis.push_back(m.col(c));
    return basis;
}

inline bool in_span(const std::vector<Vec>& gens, const Vec& v) {
    if (v.is_zero()) return true;
    if (gens.empty()) return false;
    SolveResult s = solve(Mat::from_columns(gens), v);
    return s.kind != SolveKind::None;
}

inline bool same_span(const std::vector<Vec>& a, const std::vector<Vec>& b) {
    return std::all_of(a.begin(), a.end(), [&](const Vec& v) { return in_span(b, v); }) &&
           std::all_of(b.begin(), b.end(), [&](const Vec& v) { return in_span(a, v); });
}

// ----------------------------------------------------------- symmetric forms

struct Signature {
    std::size_t neg = 0, pos = 0, null = 0;  // (negative, positive, null) counts
    friend bool operator==(const Signature&, const Signature&) = default;
};

class SymmetricForm {
public:
    SymmetricForm() = default;
    explicit SymmetricForm(Mat gram) : gram_(std::move(gram)) {
        if (gram_.rows() != gram_.cols()) throw DimensionMismatch("gram matrix must be square");
        if (gram_ != gram_.transposed()) throw std::invalid_argument("gram matrix must be symmetric");
    }

    std::size_t dim() const { return gram_.rows(); }
    const Mat& gram() const { return gram_; }

    QSqrt2 eval(const Vec& x, const Vec& y) const {
        QSqrt2 t(0);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim(); ++j) t += x[i] * gram_(i, j) * y[j];
        }
        return t;
    }

    bool is_degenerate() const { return rank(gram_) < dim(); }

    // Congruence transform S^T G S.
    SymmetricForm pulled_back(const Mat& s) const {
        return SymmetricForm(s.transposed() * gram_ * s);
    }

    // Counts of negative/positive/null squares via exact symmetric reduction.
    // The first component counts NEGATIVE squares.
    Signature signature() const {
        Mat g = gram_;
        std::size_t n = dim();
        Signature sig;
        std::vector<bool> done(n, false);
        auto clear_with_pivot = [&](std::size_t p) {
            QSqrt2 inv = g(p, p).inverse();
            for (std::size_t i = 0; i < n; ++i) {
                if (i == p || done[i] || g(i, p).is_zero()) continue;
                QSqrt2 f = g(i, p) * inv;
                // row_i -= f * row_p ; col_i -= f * col_p
                for (std::size_t j = 0; j < n; ++j) g(i, j) -= f * g(p, j);
                for (std::size_t j = 0; j < n; ++j) g(j, i) -= f * g(j, p);
            }
            done[p] = true;
            int s = g(p, p).sign();
            (s > 0 ? sig.pos : sig.neg) += 1;
        };
        for (;;) {
            std::size_t p = n;
            for (std::size_t i = 0; i < n; ++i)
                if (!done[i] && !g(i, i).is_zero()) { p = i; break; }
            if (p < n) {
                clear_with_pivot(p);
                continue;
            }
            // all remaining diagonal entries vanish; find an off-diagonal entry
            bool found = false;
            for (std::size_t i = 0; i < n && !found; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < n && !found; ++j) {
                    if (done[j] || g(i, j).is_zero()) continue;
                    // add row/col j onto i: new diagonal entry 2 g(i,j) != 0
                    for (std::size_t k = 0; k < n; ++k) g(i, k) += g(j, k);
                    for (std::size_t k = 0; k < n; ++k) g(k, i) += g(k, j);
                    found = true;
                }
            }
            if (!found) break;
        }
        sig.null = n - sig.neg - sig.pos;
        return sig;
    }

private:
    Mat gram_;
};

// --------------------------------------------------------- alternating forms

namespace detail {
inline int sort2(std::size_t& i, std::size_t& j) {
    if (i == j) return 0;
    if (i > j) {
        std::swap(i, j);
        return -1;
    }
    return 1;
}
inline int sort3(std::size_t& i, std::size_t& j, std::size_t& k) {
    int s = 1;
    if (i > j) { std::swap(i, j); s = -s; }
    if (j > k) { std::swap(j, k); s = -s; }
    if (i > j) { std::swap(i, j); s = -s; }
    if (i == j || j == k) return 0;
    return s;
}
}  // namespace detail

// Alternating bilinear form with values in T (QSqrt2 or Vec). Coefficients are
// stored on strictly increasing index pairs of the underlying basis.
template <class T>
class Alt2 {
public:
    Alt2() = default;
    Alt2(std::size_t dim, T zero) : dim_(dim), zero_(std::move(zero)) {}

    std::size_t dim() const { return dim_; }
    const T& zero_value() const { return zero_; }

    void set(std::size_t i, std::size_t j, T v) {
        int s = detail::sort2(i, j);
        if (s == 0) throw std::invalid_argument("Alt2: repeated index");
        if (s < 0) v = -v;
        if (v == zero_) coeff_.erase({i, j});
        else coeff_[{i, j}] = std::move(v);
    }
    T get(std::size_t i, std::size_t j) const {
        int s = detail::sort2(i, j);
        if (s == 0) return zero_;
        auto it = coeff_.find({i, j});
        if (it == coeff_.end()) return zero_;
        return s < 0 ? T(-it->second) : it->second;
    }

    T eval(const Vec& x, const Vec& y) const {
        T total = zero_;
        for (const auto& [ij, c] : coeff_) {
            auto [i, j] = ij;
            QSqrt2 minor = x[i] * y[j] - x[j] * y[i];
            if (!minor.is_zero()) total += minor * c;
        }
        return total;
    }

    const std::map<std::pair<std::size_t, std::size_t>, T>& terms() const { return coeff_; }

    friend Alt2 operator+(const Alt2& a, const Alt2& b) {
        Alt2 r = a;
        for (const auto& [ij, c] : b.coeff_) r.set(ij.first, ij.second, r.get(ij.first, ij.second) + c);
        return r;
    }
    friend Alt2 operator-(const Alt2& a, const Alt2& b) {
        Alt2 r = a;
        for (const auto& [ij, c] : b.coeff_) r.set(ij.first, ij.second, r.get(ij.first, ij.second) - c);
        return r;
    }
    friend bool operator==(const Alt2& a, const Alt2& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const Alt2& a, const Alt2& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    T zero_{};
    std::map<std::pair<std::size_t, std::size_t>, T> coeff_;
};

// Alternating trilinear form; same storage and evaluation conventions.
template <class T>
class Alt3 {
public:
    Alt3() = default;
    Alt3(std::size_t dim, T zero) : dim_(dim), zero_(std::move(zero)) {}

    std::size_t dim() const { return dim_; }
    const T& zero_value() const { return zero_; }

    void set(std::size_t i, std::size_t j, std::size_t k, T v) {
        int s = detail::sort3(i, j, k);
        if (s == 0) throw std::invalid_argument("Alt3: repeated index");
        if (s < 0) v = -v;
        if (v == zero_) coeff_.erase({i, j, k});
        else coeff_[{i, j, k}] = std::move(v);
    }
    T get(std::size_t i, std::size_t j, std::size_t k) const {
        int s = detail::sort3(i, j, k);
        if (s == 0) return zero_;
        auto it = coeff_.find({i, j, k});
        if (it == coeff_.end()) return zero_;
        return s < 0 ? T(-it->second) : it->second;
    }

    T eval(const Vec& x, const Vec& y, const Vec& z) const {
        T total = zero_;
        for (const auto& [ijk, c] : coeff_) {
            auto [i, j, k] = ijk;
            // det [ [x_i y_i z_i], [x_j y_j z_j], [x_k y_k z_k] ]
            QSqrt2 minor = x[i] * (y[j] * z[k] - y[k] * z[j]) - y[i] * (x[j] * z[k] - x[k] * z[j]) +
                           z[i] * (x[j] * y[k] - x[k] * y[j]);
            if (!minor.is_zero()) total += minor * c;
        }
        return total;
    }

    const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, T>& terms() const {
        return coeff_;
    }

    friend Alt3 operator+(const Alt3& a, const Alt3& b) {
        Alt3 r = a;
        for (const auto& [ijk, c] : b.coeff_) {
            auto [i, j, k] = ijk;
            r.set(i, j, k, r.get(i, j, k) + c);
        }
        return r;
    }
    friend Alt3 operator-(const Alt3& a, const Alt3& b) {
        Alt3 r = a;
        for (const auto& [ijk, c] : b.coeff_) {
            auto [i, j, k] = ijk;
            r.set(i, j, k, r.get(i, j, k) - c);
        }
        return r;
    }
    friend bool operator==(const Alt3& a, const Alt3& b) { return a.coeff_ == b.coeff_; }
    friend bool operator!=(const Alt3& a, const Alt3& b) { return !(a == b); }

private:
    std::size_t dim_ = 0;
    T zero_{};
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, T> coeff_;
};

}  // namespace g2syms
