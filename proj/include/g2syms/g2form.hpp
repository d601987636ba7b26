#pragma once

// Nice 3-forms, cross products, and the passage between the three equivalent
// descriptions of a G2 structure on a 7-dimensional quadratic space: a 3-form
// in Witt-normal shape, a cross-product table, and a projective non-isotropic
// spinor.

#include "g2syms/clifford.hpp"
#include "g2syms/linalg.hpp"
#include "g2syms/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace g2syms {

// Antisymmetric product table b(b_i, b_j) on a named basis, stored for i < j,
// together with the metric that couples it to 3-forms.
class CrossProduct {
public:
    CrossProduct(SymmetricForm metric, Alt2<Vec> table)
        : metric_(std::move(metric)), table_(std::move(table)) {}

    static CrossProduct zero(SymmetricForm metric) {
        std::size_t n = metric.dim();
        return CrossProduct(std::move(metric), Alt2<Vec>(n, Vec(n)));
    }

    std::size_t dim() const { return metric_.dim(); }
    const SymmetricForm& metric() const { return metric_; }
    const Alt2<Vec>& table() const { return table_; }

    Vec eval(const Vec& x, const Vec& y) const { return table_.eval(x, y); }

    void set(std::size_t i, std::size_t j, Vec v) { table_.set(i, j, std::move(v)); }
    Vec get(std::size_t i, std::size_t j) const { return table_.get(i, j); }

    friend bool operator==(const CrossProduct& a, const CrossProduct& b) {
        return a.metric_.gram() == b.metric_.gram() && a.table_ == b.table_;
    }

private:
    SymmetricForm metric_;
    Alt2<Vec> table_;
};

// A 3-form on a 7-dimensional quadratic space; when witt_witness is present
// its columns are an ordered basis in whose dual the form has the standard
// six-term shape (that is what certifies the normal form).
struct GStructure {
    Alt3<QSqrt2> omega;
    SymmetricForm metric;
    std::optional<Mat> witt_witness;
};

// Coefficients of the reference 3-form in normal index order (0-based):
// sqrt2 s127 + sqrt2 s356 + s145 + s246 - s347 with respect to the dual of a
// Witt basis.
inline Alt3<QSqrt2> omega0_table() {
    Alt3<QSqrt2> w(7, QSqrt2(0));
    const QSqrt2 rt2 = QSqrt2::sqrt2();
    w.set(0, 1, 6, rt2);
    w.set(2, 4, 5, rt2);
    w.set(0, 3, 4, QSqrt2(1));
    w.set(1, 3, 5, QSqrt2(1));
    w.set(2, 3, 6, QSqrt2(-1));
    return w;
}

// The reference structure on an ordered basis (columns of `basis`, expressed
// in the coordinates of `metric`). The basis must be Witt for the metric.
inline GStructure omega0(const SymmetricForm& metric, const Mat& basis) {
    if (metric.dim() != 7 || basis.rows() != 7 || basis.cols() != 7)
        throw DimensionMismatch("omega0: expected a 7-dimensional space");
    if (metric.pulled_back(basis).gram() != witt_gram_matrix())
        throw std::invalid_argument("omega0: basis is not Witt for the metric");
    Alt3<QSqrt2> w0 = omega0_table();
    Mat to_witness = inverse(basis);
    Alt3<QSqrt2> w(7, QSqrt2(0));
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            for (std::size_t k = j + 1; k < 7; ++k) {
                QSqrt2 c = w0.eval(to_witness.col(i), to_witness.col(j), to_witness.col(k));
                if (!c.is_zero()) w.set(i, j, k, c);
            }
    return GStructure{std::move(w), metric, basis};
}

inline GStructure standard_omega0() {
    return omega0(SymmetricForm(witt_gram_matrix()), Mat::identity(7));
}

// Checks that the witness basis is Witt and that the form has the standard
// coefficient table in the witness's dual basis.
inline Report check_witt_normal_form(const GStructure& g) {
    Report rpt;
    if (!g.witt_witness) {
        rpt.add("witness-present", false, "no Witt witness recorded");
        return rpt;
    }
    const Mat& w = *g.witt_witness;
    rpt.add("witness-gram-is-witt", g.metric.pulled_back(w).gram() == witt_gram_matrix());
    Alt3<QSqrt2> w0 = omega0_table();
    bool same = true;
    for (std::size_t i = 0; i < 7 && same; ++i)
        for (std::size_t j = i + 1; j < 7 && same; ++j)
            for (std::size_t k = j + 1; k < 7 && same; ++k)
                if (g.omega.eval(w.col(i), w.col(j), w.col(k)) != w0.get(i, j, k)) same = false;
    rpt.add("witness-dual-coefficients-standard", same);
    return rpt;
}

// b(X, Y) = metric-raise of omega(., X, Y).
inline CrossProduct cross_from_form(const GStructure& g) {
    std::size_t n = g.metric.dim();
    if (g.metric.is_degenerate()) throw std::invalid_argument("cross_from_form: degenerate metric");
    Mat ginv = inverse(g.metric.gram());
    Alt2<Vec> table(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec c(n);
            for (std::size_t k = 0; k < n; ++k)
                c[k] = g.omega.eval(Vec::unit(n, k), Vec::unit(n, i), Vec::unit(n, j));
            Vec v = ginv * c;
            if (!v.is_zero()) table.set(i, j, std::move(v));
        }
    return CrossProduct(g.metric, std::move(table));
}

// omega_b(X, Y, Z) = <X, b(Y, Z)>; inverse of cross_from_form.
inline GStructure form_from_cross(const CrossProduct& b,
                                  std::optional<Mat> witness = std::nullopt) {
    std::size_t n = b.dim();
    Alt3<QSqrt2> w(n, QSqrt2(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                QSqrt2 c = b.metric().eval(Vec::unit(n, i), b.get(j, k));
                if (!c.is_zero()) w.set(i, j, k, c);
            }
    return GStructure{std::move(w), b.metric(), std::move(witness)};
}

// b_psi(X, Y) is the unique vector Z with Z . psi = X Y . psi + <X,Y> psi;
// requires a non-isotropic psi (which makes Z -> Z . psi injective).
inline CrossProduct cross_from_spinor(const CliffordRep& rep, const Spinor& psi,
                                      const SymmetricForm& metric) {
    if (rep.spinor_form().eval(psi, psi).is_zero())
        throw std::invalid_argument("cross_from_spinor: isotropic spinor");
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < 7; ++i) cols.push_back(rep.phi(i) * psi);
    Mat mult = Mat::from_columns(cols);
    Alt2<Vec> table(7, Vec(7));
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j) {
            Spinor rhs = rep.phi(i) * (rep.phi(j) * psi) + metric.gram()(i, j) * psi;
            SolveResult s = solve(mult, rhs);
            if (s.kind != SolveKind::Unique)
                throw std::logic_error("cross_from_spinor: multiplication map not injective");
            if (!s.particular.is_zero()) table.set(i, j, s.particular);
        }
    return CrossProduct(metric, std::move(table));
}

// Cross-product axioms: antisymmetry and orthogonality on all basis pairs;
// the quadratic identity b(X, b(X, Y)) = -<X,X> Y + <X,Y> X on every basis
// vector and on every pairwise sum b_i + b_j as first argument. The identity
// is quadratic in X, so this spanning set polarizes it to arbitrary X.
inline Report check_cross_axioms(const CrossProduct& b) {
    Report rpt;
    std::size_t n = b.dim();
    bool anti = true, orth = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = Vec::unit(n, i), y = Vec::unit(n, j);
            if (b.eval(x, y) != -b.eval(y, x)) anti = false;
            if (!b.metric().eval(x, b.eval(x, y)).is_zero()) orth = false;
        }
    rpt.add("antisymmetry", anti);
    rpt.add("first-argument-orthogonality", orth);

    std::vector<Vec> firsts;
    for (std::size_t i = 0; i < n; ++i) firsts.push_back(Vec::unit(n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) firsts.push_back(Vec::unit(n, i) + Vec::unit(n, j));
    bool quad = true;
    std::string first_failure;
    for (const Vec& x : firsts) {
        QSqrt2 xx = b.metric().eval(x, x);
        for (std::size_t j = 0; j < n; ++j) {
            Vec y = Vec::unit(n, j);
            Vec lhs = b.eval(x, b.eval(x, y));
            Vec rhs = -(xx * y) + b.metric().eval(x, y) * x;
            if (lhs != rhs && quad) {
                quad = false;
                first_failure = "failure at basis argument " + std::to_string(j);
            }
        }
    }
    rpt.add("triple-identity-polarized", quad, first_failure);
    return rpt;
}

// Dimension and basis of { A in so(metric) : the 3-slot derivative of omega by
// A vanishes }.
struct SoStabilizer {
    std::size_t dimension = 0;
    std::vector<Mat> basis;
};

inline SoStabilizer stabilizer_in_so(const GStructure& g) {
    std::size_t n = g.metric.dim();
    // so(metric) basis
    std::vector<Vec> so_cols;
    for (std::size_t k = 0; k < n * n; ++k) {
        Mat a(n, n);
        a(k / n, k % n) = 1;
        so_cols.push_back(flatten(a.transposed() * g.metric.gram() + g.metric.gram() * a));
    }
    std::vector<Mat> sob;
    for (const Vec& v : kernel(Mat::from_columns(so_cols))) {
        Mat a(n, n);
        for (std::size_t idx = 0; idx < n * n; ++idx) a(idx / n, idx % n) = v[idx];
        sob.push_back(std::move(a));
    }
    // rows: one equation per increasing triple, columns: so-basis coefficients
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec row(sob.size());
                for (std::size_t a = 0; a < sob.size(); ++a) {
                    Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                    row[a] = g.omega.eval(sob[a] * x, y, z) + g.omega.eval(x, sob[a] * y, z) +
                             g.omega.eval(x, y, sob[a] * z);
                }
                rows.push_back(std::move(row));
            }
    SoStabilizer out;
    for (const Vec& c : kernel(Mat::from_rows(rows))) {
        Mat a(n, n);
        for (std::size_t b = 0; b < sob.size(); ++b)
            if (!c[b].is_zero()) a += c[b] * sob[b];
        out.basis.push_back(std::move(a));
    }
    out.dimension = out.basis.size();
    return out;
}

}  // namespace g2syms
