#pragma once

// Lie algebras given by exact structure constants: Jacobi and Killing-form
// checks, lower central series, metric involutive structures (symmetric-triple
// candidates), holonomy algebras, and the indecomposability decision
// procedure (commutant + trace-form radical, then a bounded search for a
// self-adjoint idempotent).

#include "g2syms/linalg.hpp"
#include "g2syms/report.hpp"

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace g2syms {

class LieAlgebra {
public:
    LieAlgebra() : dim_(0), brackets_(0, Vec(0)) {}
    explicit LieAlgebra(std::size_t dim, std::vector<std::string> labels = {})
        : dim_(dim), labels_(std::move(labels)), brackets_(dim, Vec(dim)) {
        if (labels_.empty())
            for (std::size_t i = 0; i < dim; ++i) labels_.push_back("x" + std::to_string(i + 1));
        if (labels_.size() != dim) throw std::invalid_argument("label count mismatch");
    }

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Alt2<Vec>& brackets() const { return brackets_; }

    void set_bracket(std::size_t i, std::size_t j, Vec v) { brackets_.set(i, j, std::move(v)); }
    Vec basis_bracket(std::size_t i, std::size_t j) const { return brackets_.get(i, j); }
    Vec bracket(const Vec& x, const Vec& y) const { return brackets_.eval(x, y); }

    Mat ad(const Vec& x) const {
        Mat m(dim_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec c = bracket(x, Vec::unit(dim_, j));
            for (std::size_t i = 0; i < dim_; ++i) m(i, j) = c[i];
        }
        return m;
    }

    // Rewrites the structure constants in the basis given by the columns of s.
    LieAlgebra change_basis(const Mat& s, std::vector<std::string> new_labels = {}) const {
        Mat sinv = inverse(s);
        LieAlgebra out(dim_, std::move(new_labels));
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Vec v = sinv * bracket(s.col(i), s.col(j));
                if (!v.is_zero()) out.set_bracket(i, j, std::move(v));
            }
        return out;
    }

private:
    std::size_t dim_;
    std::vector<std::string> labels_;
    Alt2<Vec> brackets_;
};

// ----------------------------------------------------------------- checkers

inline Report jacobi_check(const LieAlgebra& l) {
    Report rpt;
    std::size_t n = l.dim();
    bool ok = true;
    std::ostringstream failures;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                Vec r = l.bracket(l.bracket(x, y), z) + l.bracket(l.bracket(y, z), x) +
                        l.bracket(l.bracket(z, x), y);
                if (!r.is_zero()) {
                    ok = false;
                    failures << " (" << l.labels()[i] << "," << l.labels()[j] << "," << l.labels()[k]
                             << ") residual [";
                    for (std::size_t c = 0; c < n; ++c) failures << (c ? " " : "") << r[c].str();
                    failures << "]";
                }
            }
    rpt.add("jacobi", ok, ok ? "" : "failing triples:" + failures.str());
    return rpt;
}

inline SymmetricForm killing_form(const LieAlgebra& l) {
    std::size_t n = l.dim();
    std::vector<Mat> ads;
    for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad(Vec::unit(n, i)));
    Mat k(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) k(i, j) = k(j, i) = (ads[i] * ads[j]).trace();
    return SymmetricForm(std::move(k));
}

// Dimensions of g, [g,g], [g,[g,g]], ... until the chain stabilizes.
inline std::vector<std::size_t> lower_central_series(const LieAlgebra& l) {
    std::size_t n = l.dim();
    std::vector<std::size_t> dims = {n};
    std::vector<Vec> current;
    for (std::size_t i = 0; i < n; ++i) current.push_back(Vec::unit(n, i));
    for (;;) {
        std::vector<Vec> next;
        for (std::size_t i = 0; i < n; ++i)
            for (const Vec& v : current) {
                Vec b = l.bracket(Vec::unit(n, i), v);
                if (!b.is_zero()) next.push_back(std::move(b));
            }
        std::vector<Vec> basis = span_basis(next);
        dims.push_back(basis.size());
        if (basis.size() == 0 || basis.size() == dims[dims.size() - 2]) break;
        current = std::move(basis);
    }
    return dims;
}

struct Nilpotency {
    bool nilpotent = false;
    std::size_t nilpotency_class = 0;  // smallest c with g^(c+1) = 0
};

inline Nilpotency is_nilpotent(const LieAlgebra& l) {
    std::vector<std::size_t> dims = lower_central_series(l);
    Nilpotency out;
    out.nilpotent = dims.back() == 0;
    if (out.nilpotent) out.nilpotency_class = dims.size() - 1;
    return out;
}

// ------------------------------------------------- metric involutive triples

class MetricInvolutiveLie {
public:
    MetricInvolutiveLie() : alg_(0), theta_(0, 0), ip_(Mat(0, 0)) {}
    MetricInvolutiveLie(LieAlgebra alg, Mat theta, SymmetricForm ip)
        : alg_(std::move(alg)), theta_(std::move(theta)), ip_(std::move(ip)) {
        std::size_t n = alg_.dim();
        if (theta_.rows() != n || theta_.cols() != n || ip_.dim() != n)
            throw DimensionMismatch("triple: inconsistent dimensions");
        minus_ = eigenspace(QSqrt2(-1));
        plus_ = eigenspace(QSqrt2(1));
    }

    const LieAlgebra& algebra() const { return alg_; }
    const Mat& theta() const { return theta_; }
    const SymmetricForm& ip() const { return ip_; }
    const std::vector<Vec>& minus_basis() const { return minus_; }
    const std::vector<Vec>& plus_basis() const { return plus_; }

    SymmetricForm minus_form() const {
        Mat g(minus_.size(), minus_.size());
        for (std::size_t i = 0; i < minus_.size(); ++i)
            for (std::size_t j = 0; j < minus_.size(); ++j) g(i, j) = ip_.eval(minus_[i], minus_[j]);
        return SymmetricForm(std::move(g));
    }

private:
    std::vector<Vec> eigenspace(const QSqrt2& ev) const {
        Mat m = theta_ - ev * Mat::identity(alg_.dim());
        return kernel(m);
    }
    LieAlgebra alg_;
    Mat theta_;
    SymmetricForm ip_;
    std::vector<Vec> minus_, plus_;
};

// theta is an isometric involutive automorphism, the metric is ad-invariant,
// the eigenspaces are orthogonal, and [g-, g-] = g+.
inline Report metric_invariance(const MetricInvolutiveLie& t) {
    Report rpt;
    const LieAlgebra& l = t.algebra();
    std::size_t n = l.dim();

    rpt.add("theta-involutive", t.theta() * t.theta() == Mat::identity(n));
    rpt.add("eigenspaces-span", t.minus_basis().size() + t.plus_basis().size() == n,
            "dim g- = " + std::to_string(t.minus_basis().size()) +
                ", dim g+ = " + std::to_string(t.plus_basis().size()));

    bool aut = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec lhs = t.theta() * l.basis_bracket(i, j);
            Vec rhs = l.bracket(t.theta() * Vec::unit(n, i), t.theta() * Vec::unit(n, j));
            if (lhs != rhs) aut = false;
        }
    rpt.add("theta-automorphism", aut);

    rpt.add("theta-isometry",
            t.ip().pulled_back(t.theta()).gram() == t.ip().gram());

    bool inv = true;
    for (std::size_t i = 0; i < n && inv; ++i)
        for (std::size_t j = 0; j < n && inv; ++j)
            for (std::size_t k = 0; k < n && inv; ++k) {
                Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, k);
                QSqrt2 v = t.ip().eval(l.bracket(x, y), z) + t.ip().eval(y, l.bracket(x, z));
                if (!v.is_zero()) inv = false;
            }
    rpt.add("metric-ad-invariant", inv);

    bool orth = true;
    for (const Vec& p : t.plus_basis())
        for (const Vec& m : t.minus_basis())
            if (!t.ip().eval(p, m).is_zero()) orth = false;
    rpt.add("eigenspaces-orthogonal", orth);

    std::vector<Vec> brackets;
    for (std::size_t a = 0; a < t.minus_basis().size(); ++a)
        for (std::size_t b = a + 1; b < t.minus_basis().size(); ++b) {
            Vec v = l.bracket(t.minus_basis()[a], t.minus_basis()[b]);
            if (!v.is_zero()) brackets.push_back(std::move(v));
        }
    rpt.add("minus-brackets-span-plus", same_span(brackets, t.plus_basis()));
    return rpt;
}

// --------------------------------------------------------------- holonomy

struct HolonomyData {
    bool well_defined = false;  // every [g+, g-] landed in g-
    std::vector<Mat> matrices;  // ad(X)|g- in the g- basis, one per g+ basis vector
    std::size_t dimension = 0;  // dim span of the matrices
    bool abelian = false;
};

inline HolonomyData holonomy_algebra(const MetricInvolutiveLie& t) {
    HolonomyData out;
    const std::vector<Vec>& mb = t.minus_basis();
    if (mb.empty()) {
        out.well_defined = true;
        out.abelian = true;
        return out;
    }
    Mat mb_cols = Mat::from_columns(mb);
    out.well_defined = true;
    for (const Vec& x : t.plus_basis()) {
        Mat h(mb.size(), mb.size());
        for (std::size_t j = 0; j < mb.size(); ++j) {
            SolveResult s = solve(mb_cols, t.algebra().bracket(x, mb[j]));
            if (s.kind == SolveKind::None) {
                out.well_defined = false;
                return out;
            }
            for (std::size_t i = 0; i < mb.size(); ++i) h(i, j) = s.particular[i];
        }
        out.matrices.push_back(std::move(h));
    }
    std::vector<Vec> flats;
    for (const Mat& m : out.matrices) flats.push_back(flatten(m));
    out.dimension = flats.empty() ? 0 : span_basis(flats).size();
    out.abelian = true;
    for (const Mat& a : out.matrices)
        for (const Mat& b : out.matrices)
            if (!commutator(a, b).is_zero()) out.abelian = false;
    return out;
}

// ------------------------------------------------------- indecomposability

namespace poly {

// Polynomials over Q(sqrt2), coefficients low to high, used by the idempotent
// search. All arithmetic is exact.
using Poly = std::vector<QSqrt2>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline std::size_t degree(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

inline Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(QSqrt2(long(i)) * p[i]);
    trim(d);
    return d;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, QSqrt2(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), QSqrt2(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// division with remainder; divisor must be nonzero
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    Poly q;
    trim(a);
    if (b.empty()) throw std::invalid_argument("poly division by zero");
    while (a.size() >= b.size() && !a.empty()) {
        QSqrt2 c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        Poly term(shift + 1, QSqrt2(0));
        term[shift] = c;
        if (q.size() < term.size()) q.resize(term.size(), QSqrt2(0));
        q[shift] += c;
        a = sub(std::move(a), mul(term, b));
    }
    trim(q);
    return {q, a};
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        QSqrt2 inv = a.back().inverse();
        for (QSqrt2& c : a) c *= inv;
    }
    return a;
}

// Bezout: returns (u, v) with u a + v b = gcd(a, b) (gcd made monic).
inline std::pair<Poly, Poly> bezout(Poly a, Poly b) {
    Poly r0 = a, r1 = b, u0 = {QSqrt2(1)}, u1 = {}, v0 = {}, v1 = {QSqrt2(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly u2 = sub(u0, mul(q, u1));
        Poly v2 = sub(v0, mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty()) {
        QSqrt2 inv = r0.back().inverse();
        for (QSqrt2& c : u0) c *= inv;
        for (QSqrt2& c : v0) c *= inv;
    }
    return {u0, v0};
}

inline QSqrt2 eval(const Poly& p, const QSqrt2& x) {
    QSqrt2 r(0);
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

inline Mat eval_matrix(const Poly& p, const Mat& m) {
    std::size_t n = m.rows();
    Mat r(n, n);
    for (std::size_t i = p.size(); i-- > 0;) {
        r = r * m;
        if (!p[i].is_zero()) r += p[i] * Mat::identity(n);
    }
    return r;
}

// exact square root of a nonnegative rational, if it exists
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    BigInt num = numerator(r), den = denominator(r);
    BigInt sn = boost::multiprecision::sqrt(num), sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

// exact square root in Q(sqrt2), if it exists
inline std::optional<QSqrt2> exact_sqrt(const QSqrt2& t) {
    const Rational a = t.rat_part(), b = t.sqrt2_part();
    if (t.sign() < 0) return std::nullopt;
    if (b == 0) {
        if (auto u = rational_sqrt(a)) return QSqrt2(*u);
        if (auto v = rational_sqrt(Rational(a / 2))) return QSqrt2(Rational(0), *v);
        return std::nullopt;
    }
    // (u + v sqrt2)^2 = u^2 + 2 v^2 + 2 u v sqrt2
    auto d = rational_sqrt(Rational(a * a - 2 * b * b));
    if (!d) return std::nullopt;
    for (int sign : {1, -1}) {
        Rational u2((a + (sign > 0 ? *d : Rational(-*d))) / 2);
        if (auto u = rational_sqrt(u2)) {
            if (*u == 0) continue;
            Rational v(b / (2 * *u));
            QSqrt2 s(*u, v);
            if (s * s == t) return s;
        }
    }
    return std::nullopt;
}

// roots in Q(sqrt2) of a degree <= 2 polynomial
inline std::vector<QSqrt2> quadratic_roots(const Poly& p) {
    std::vector<QSqrt2> roots;
    if (p.size() == 2) {
        roots.push_back(-p[0] / p[1]);
    } else if (p.size() == 3) {
        QSqrt2 a = p[2], b = p[1], c = p[0];
        QSqrt2 disc = b * b - QSqrt2(4) * a * c;
        if (auto s = exact_sqrt(disc)) {
            roots.push_back((-b + *s) / (QSqrt2(2) * a));
            if (!s->is_zero()) roots.push_back((-b - *s) / (QSqrt2(2) * a));
        }
    }
    return roots;
}

}  // namespace poly

enum class Decomposability { Indecomposable, Decomposable, Inconclusive };

struct IndecomposabilityResult {
    Decomposability verdict = Decomposability::Inconclusive;
    std::size_t commutant_dim = 0;
    std::size_t semisimple_quotient_dim = 0;  // dim C / rad(C) via the trace form
    std::vector<Mat> commutant_basis;
    std::optional<Mat> projector;  // self-adjoint idempotent witness when decomposable
};

namespace detail {

inline Vec flat(const Mat& m) { return flatten(m); }

// minimal polynomial of m by the first linear dependence among its powers
inline poly::Poly minimal_polynomial(const Mat& m) {
    std::size_t n = m.rows();
    std::vector<Vec> powers;
    Mat p = Mat::identity(n);
    for (std::size_t d = 0; d <= n; ++d) {
        powers.push_back(flat(p));
        Mat stacked = Mat::from_columns(powers);
        if (rank(stacked) < powers.size()) {
            // last power depends on the previous ones
            std::vector<Vec> prev(powers.begin(), powers.end() - 1);
            SolveResult s = solve(Mat::from_columns(prev), powers.back());
            poly::Poly mu(d + 1, QSqrt2(0));
            mu[d] = 1;
            for (std::size_t i = 0; i < d; ++i) mu[i] = -s.particular[i];
            return mu;
        }
        p = p * m;
    }
    throw std::logic_error("minimal polynomial not found");
}

// coprime factor split of mu = (x - lambda)^v * rest
inline std::optional<std::pair<poly::Poly, poly::Poly>> split_at_root(const poly::Poly& mu,
                                                                      const QSqrt2& lambda) {
    if (!poly::eval(mu, lambda).is_zero()) return std::nullopt;
    poly::Poly linear = {-lambda, QSqrt2(1)};
    poly::Poly f = {QSqrt2(1)}, rest = mu;
    for (;;) {
        auto [q, r] = poly::divmod(rest, linear);
        if (!r.empty()) break;
        f = poly::mul(f, linear);
        rest = q;
    }
    if (poly::degree(rest) == 0) return std::nullopt;  // mu is a pure power: no split
    return std::make_pair(f, rest);
}

// all coprime splits available for mu without factoring: at the root 0, at a
// small list of candidate roots, and at exact roots of a quadratic squarefree
// part
inline std::vector<std::pair<poly::Poly, poly::Poly>> coprime_splits(const poly::Poly& mu) {
    std::vector<std::pair<poly::Poly, poly::Poly>> out;
    std::vector<QSqrt2> candidates = {QSqrt2(0), QSqrt2(1), QSqrt2(-1), QSqrt2(2), QSqrt2(-2),
                                      QSqrt2(Rational(1, 2)), QSqrt2(Rational(-1, 2)),
                                      QSqrt2::sqrt2(), -QSqrt2::sqrt2()};
    poly::Poly sf = mu;
    poly::Poly g = poly::gcd(mu, poly::derivative(mu));
    if (poly::degree(g) > 0) sf = poly::divmod(mu, g).first;
    if (poly::degree(sf) <= 2)
        for (const QSqrt2& r : poly::quadratic_roots(sf)) candidates.push_back(r);
    for (const QSqrt2& lambda : candidates)
        if (auto s = split_at_root(mu, lambda)) out.push_back(*s);
    return out;
}

}  // namespace detail

// Decides decomposability of a metric representation: matrices acting on a
// space with a nondegenerate symmetric form. Tier 1: if the commutant C of
// the matrices has one-dimensional semisimple quotient (radical taken as the
// radical of the trace form, valid in characteristic zero), no nontrivial
// idempotent exists and the representation is indecomposable. Tier 2: bounded
// search for a metric-self-adjoint idempotent in C; a hit is a genuine
// orthogonal invariant splitting.
inline IndecomposabilityResult indecomposability_of_rep(const std::vector<Mat>& matrices,
                                                        const SymmetricForm& gm) {
    if (gm.is_degenerate()) throw std::invalid_argument("indecomposability: degenerate metric");
    std::size_t n = gm.dim();
    IndecomposabilityResult out;
    if (n == 0) {
        out.verdict = Decomposability::Indecomposable;
        return out;
    }

    // commutant of the given matrices (an involution acting as -Id commutes
    // with everything, so it contributes no equations)
    std::vector<Vec> ckernel;
    if (matrices.empty()) {
        for (std::size_t k = 0; k < n * n; ++k) ckernel.push_back(Vec::unit(n * n, k));
    } else {
        std::vector<Vec> cols;
        for (std::size_t k = 0; k < n * n; ++k) {
            Mat m(n, n);
            m(k / n, k % n) = 1;
            Vec stacked(n * n * matrices.size());
            for (std::size_t h = 0; h < matrices.size(); ++h) {
                Vec f = detail::flat(commutator(m, matrices[h]));
                for (std::size_t idx = 0; idx < n * n; ++idx) stacked[h * n * n + idx] = f[idx];
            }
            cols.push_back(std::move(stacked));
        }
        ckernel = kernel(Mat::from_columns(cols));
    }
    for (const Vec& v : ckernel) {
        Mat m(n, n);
        for (std::size_t idx = 0; idx < n * n; ++idx) m(idx / n, idx % n) = v[idx];
        out.commutant_basis.push_back(std::move(m));
    }
    out.commutant_dim = out.commutant_basis.size();

    // radical of the trace form on C (Dickson: equals the Jacobson radical)
    std::size_t d = out.commutant_dim;
    Mat trace_gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            trace_gram(i, j) = trace_gram(j, i) =
                (out.commutant_basis[i] * out.commutant_basis[j]).trace();
    out.semisimple_quotient_dim = rank(trace_gram);
    if (out.semisimple_quotient_dim == 1) {
        out.verdict = Decomposability::Indecomposable;
        return out;
    }

    // Tier 2: self-adjoint part of C
    const Mat& g = gm.gram();
    std::vector<Vec> sa_cols;
    for (const Mat& m : out.commutant_basis) {
        Mat asym = g * m - (g * m).transposed();
        sa_cols.push_back(detail::flat(asym));
    }
    std::vector<Mat> sa_basis;
    for (const Vec& c : kernel(Mat::from_columns(sa_cols))) {
        Mat m(n, n);
        for (std::size_t a = 0; a < d; ++a)
            if (!c[a].is_zero()) m += c[a] * out.commutant_basis[a];
        if (!m.is_zero()) sa_basis.push_back(std::move(m));
    }

    std::vector<Mat> candidates = sa_basis;
    for (std::size_t i = 0; i < sa_basis.size(); ++i)
        for (std::size_t j = i + 1; j < sa_basis.size() && candidates.size() < 160; ++j) {
            candidates.push_back(sa_basis[i] + sa_basis[j]);
            candidates.push_back(sa_basis[i] - sa_basis[j]);
        }
    std::mt19937 rng(7321);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int it = 0; it < 64 && !sa_basis.empty(); ++it) {
        Mat m(n, n);
        for (const Mat& b : sa_basis) m += QSqrt2(coeff(rng)) * b;
        candidates.push_back(std::move(m));
    }

    Mat id = Mat::identity(n);
    auto accept = [&](const Mat& p) -> bool {
        if (p.is_zero() || p == id) return false;
        if (p * p != p) return false;
        if (g * p != (g * p).transposed()) return false;  // self-adjointness
        for (const Mat& h : matrices)
            if (!commutator(p, h).is_zero()) return false;
        return true;
    };

    for (const Mat& m : candidates) {
        if (accept(m)) {
            out.verdict = Decomposability::Decomposable;
            out.projector = m;
            return out;
        }
    }
    std::size_t minpoly_budget = 48;
    for (const Mat& m : candidates) {
        if (minpoly_budget == 0) break;
        --minpoly_budget;
        poly::Poly mu = detail::minimal_polynomial(m);
        for (const auto& [f, rest] : detail::coprime_splits(mu)) {
            poly::Poly u = poly::bezout(f, rest).first;
            Mat p = poly::eval_matrix(u, m) * poly::eval_matrix(f, m);
            if (accept(p)) {
                out.verdict = Decomposability::Decomposable;
                out.projector = p;
                return out;
            }
            Mat q = id - p;
            if (accept(q)) {
                out.verdict = Decomposability::Decomposable;
                out.projector = q;
                return out;
            }
        }
    }
    out.verdict = Decomposability::Inconclusive;
    return out;
}

// Decomposability of a symmetric-triple candidate, tested at the holonomy
// level on g-: a proper nondegenerate invariant subspace of g- induces a
// splitting of the whole triple because g+ = [g-, g-].
inline IndecomposabilityResult indecomposability(const MetricInvolutiveLie& t) {
    HolonomyData hol = holonomy_algebra(t);
    if (!hol.well_defined)
        throw std::invalid_argument("indecomposability: holonomy representation not well defined");
    return indecomposability_of_rep(hol.matrices, t.minus_form());
}

// Orthogonal direct sum of two candidates (block brackets, block involution,
// block metric).
inline MetricInvolutiveLie direct_sum(const MetricInvolutiveLie& a, const MetricInvolutiveLie& b) {
    std::size_t na = a.algebra().dim(), nb = b.algebra().dim(), n = na + nb;
    std::vector<std::string> labels;
    for (const std::string& s : a.algebra().labels()) labels.push_back(s + "'");
    for (const std::string& s : b.algebra().labels()) labels.push_back(s + "''");
    LieAlgebra alg(n, std::move(labels));
    auto embed = [&](const Vec& v, std::size_t offset) {
        Vec w(n);
        for (std::size_t i = 0; i < v.size(); ++i) w[offset + i] = v[i];
        return w;
    };
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = i + 1; j < na; ++j) {
            Vec v = a.algebra().basis_bracket(i, j);
            if (!v.is_zero()) alg.set_bracket(i, j, embed(v, 0));
        }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j) {
            Vec v = b.algebra().basis_bracket(i, j);
            if (!v.is_zero()) alg.set_bracket(na + i, na + j, embed(v, na));
        }
    Mat theta(n, n), gram(n, n);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            theta(i, j) = a.theta()(i, j);
            gram(i, j) = a.ip().gram()(i, j);
        }
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            theta(na + i, na + j) = b.theta()(i, j);
            gram(na + i, na + j) = b.ip().gram()(i, j);
        }
    return MetricInvolutiveLie(std::move(alg), std::move(theta), SymmetricForm(std::move(gram)));
}

}  // namespace g2syms
