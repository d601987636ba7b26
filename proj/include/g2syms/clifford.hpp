#pragma once

// The Clifford algebra of the 7-dimensional Witt space in its explicit
// 8-dimensional representation of type one, together with the spin algebra,
// the spin <-> so lift at the Lie-algebra level, and spinor stabilizers.
//
// Conventions fixed here:
//   * Witt basis e1..e7 with <e_i, e_{i+4}> = 1 (i = 1,2,3), <e4,e4> = -1.
//   * Clifford relation u v + v u = -2 <u,v>.
//   * The spinor inner product pairs s_i with s_{i+4}.
// Indices are 0-based throughout the API.

#include "g2syms/linalg.hpp"
#include "g2syms/report.hpp"
#include "g2syms/scalar.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g2syms {

using Spinor = Vec;  // 8 coordinates in the basis s1..s8

class CliffordRep {
public:
    // Builds the standard representation and verifies the Clifford relations
    // and the type-one volume normalization; throws on any discrepancy.
    static CliffordRep build_standard();

    const Mat& phi(std::size_t i) const { return phi_[i]; }  // i in 0..6
    const SymmetricForm& witt_form() const { return witt_; }
    const SymmetricForm& spinor_form() const { return spinor_; }

    // Phi extended linearly to an arbitrary vector of V.
    Mat phi_of(const Vec& v) const {
        Mat m(8, 8);
        for (std::size_t i = 0; i < 7; ++i)
            if (!v[i].is_zero()) m += v[i] * phi_[i];
        return m;
    }

    Spinor act(const Vec& v, const Spinor& psi) const { return phi_of(v) * psi; }

    // Orthonormal basis assembled from the hyperbolic pairs, and the ordering
    // of its factors that makes the volume element act as +Id.
    const std::array<Vec, 7>& orthonormal_basis() const { return ehat_; }
    const std::array<std::size_t, 7>& volume_ordering() const { return volume_order_; }

    // Basis of spin(V) = span{ ehat_i ehat_j : i < j }, as 8x8 matrices.
    const std::vector<Mat>& spin_basis() const { return spin_basis_; }

    // Coordinates of xi in the spin basis; nullopt if xi is not in the span.
    std::optional<Vec> spin_coordinates(const Mat& xi) const {
        SolveResult s = solve(spin_flat_, flatten(xi));
        if (s.kind == SolveKind::None) return std::nullopt;
        return s.particular;
    }
    bool in_spin(const Mat& xi) const { return spin_coordinates(xi).has_value(); }

private:
    CliffordRep() = default;
    std::array<Mat, 7> phi_;
    SymmetricForm witt_;
    SymmetricForm spinor_;
    std::array<Vec, 7> ehat_;
    std::array<std::size_t, 7> volume_order_{};
    std::vector<Mat> spin_basis_;
    Mat spin_flat_;  // 64 x 21, columns are the flattened spin basis
};

inline Mat witt_gram_matrix() {
    Mat g(7, 7);
    for (std::size_t i = 0; i < 3; ++i) {
        g(i, i + 4) = 1;
        g(i + 4, i) = 1;
    }
    g(3, 3) = -1;
    return g;
}

inline Mat spinor_gram_matrix() {
    Mat g(8, 8);
    for (std::size_t i = 0; i < 4; ++i) {
        g(i, i + 4) = 1;
        g(i + 4, i) = 1;
    }
    return g;
}

inline CliffordRep CliffordRep::build_standard() {
    CliffordRep rep;
    rep.witt_ = SymmetricForm(witt_gram_matrix());
    rep.spinor_ = SymmetricForm(spinor_gram_matrix());

    struct Entry {
        int src, dst, sign;
    };
    // Images of the spinor basis under (1/sqrt2) Phi(e_i); unlisted basis
    // vectors map to zero. 1-based spinor indices.
    const std::vector<std::vector<Entry>> tables = {
        {{1, 8, 1}, {2, 7, 1}, {3, 6, -1}, {4, 5, -1}},   // e1
        {{1, 3, -1}, {2, 4, 1}, {7, 5, 1}, {8, 6, -1}},   // e2
        {{2, 1, -1}, {4, 3, -1}, {5, 6, 1}, {7, 8, 1}},   // e3
        {},                                               // e4 handled below
        {{5, 4, 1}, {6, 3, 1}, {7, 2, -1}, {8, 1, -1}},   // e5
        {{3, 1, 1}, {4, 2, -1}, {5, 7, -1}, {6, 8, 1}},   // e6
        {{1, 2, 1}, {3, 4, 1}, {6, 5, -1}, {8, 7, -1}},   // e7
    };
    const QSqrt2 rt2 = QSqrt2::sqrt2();
    for (std::size_t i = 0; i < 7; ++i) {
        Mat m(8, 8);
        for (const Entry& e : tables[i]) m(e.dst - 1, e.src - 1) = QSqrt2(e.sign) * rt2;
        rep.phi_[i] = m;
    }
    const int diag4[8] = {1, -1, -1, 1, -1, 1, 1, -1};
    for (std::size_t k = 0; k < 8; ++k) rep.phi_[3](k, k) = diag4[k];

    // Clifford relations: Phi_i Phi_j + Phi_j Phi_i = -2 <e_i,e_j> Id.
    const Mat& g = rep.witt_.gram();
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i; j < 7; ++j) {
            Mat r = rep.phi_[i] * rep.phi_[j] + rep.phi_[j] * rep.phi_[i] +
                    (QSqrt2(2) * g(i, j)) * Mat::identity(8);
            if (!r.is_zero())
                throw std::logic_error("Clifford relation failed for pair (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")");
        }

    // Orthonormal basis from the hyperbolic pairs: (e_i +- e_{i+4})/sqrt2 and e4.
    const QSqrt2 inv_rt2 = QSqrt2::inv_sqrt2();
    for (std::size_t i = 0; i < 3; ++i) {
        rep.ehat_[i] = inv_rt2 * (Vec::unit(7, i) + Vec::unit(7, i + 4));
        rep.ehat_[i + 3] = inv_rt2 * (Vec::unit(7, i) - Vec::unit(7, i + 4));
    }
    rep.ehat_[6] = Vec::unit(7, 3);

    auto volume = [&](const std::array<std::size_t, 7>& order) {
        Mat v = Mat::identity(8);
        for (std::size_t k : order) v = v * rep.phi_of(rep.ehat_[k]);
        return v;
    };
    rep.volume_order_ = {0, 1, 2, 3, 4, 5, 6};
    if (volume(rep.volume_order_) == -Mat::identity(8)) {
        // an odd permutation of pairwise anticommuting factors flips the sign
        std::swap(rep.volume_order_[5], rep.volume_order_[6]);
    }
    if (volume(rep.volume_order_) != Mat::identity(8))
        throw std::logic_error("volume element does not act as +Id in either ordering");

    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            rep.spin_basis_.push_back(rep.phi_of(rep.ehat_[i]) * rep.phi_of(rep.ehat_[j]));
    rep.spin_flat_ = flatten_columns(rep.spin_basis_);
    return rep;
}

inline Spinor standard_nonisotropic_spinor() {
    Spinor psi(8);
    psi[0] = 1;
    psi[4] = 1;  // s1 + s5
    return psi;
}

inline Spinor standard_isotropic_spinor() { return Vec::unit(8, 5); }  // s6

// ------------------------------------------------------------------- so(V)

inline bool in_so(const CliffordRep& rep, const Mat& a) {
    return (a.transposed() * rep.witt_form().gram() + rep.witt_form().gram() * a).is_zero();
}

// Basis of so(V) = {A : A^T G + G A = 0}, dimension 21.
inline std::vector<Mat> so_basis(const CliffordRep& rep) {
    const Mat& g = rep.witt_form().gram();
    std::vector<Vec> cols;
    for (std::size_t k = 0; k < 49; ++k) {
        Mat a(7, 7);
        a(k / 7, k % 7) = 1;
        cols.push_back(flatten(a.transposed() * g + g * a));
    }
    std::vector<Mat> basis;
    for (const Vec& k : kernel(Mat::from_columns(cols))) {
        Mat a(7, 7);
        for (std::size_t idx = 0; idx < 49; ++idx) a(idx / 7, idx % 7) = k[idx];
        basis.push_back(std::move(a));
    }
    return basis;
}

// ---------------------------------------------------------------- spin lift

// The Lie-algebra isomorphism so(V) -> spin(V):
//   A  |->  1/4 sum_{i=1..3} ( e_i A(e_{i+4}) + e_{i+4} A(e_i) ) - 1/4 e4 A(e4),
// verified to satisfy [lift(A), Phi(v)] = Phi(A v) and to lie in spin(V).
inline Mat spin_lift(const CliffordRep& rep, const Mat& a) {
    if (a.rows() != 7 || a.cols() != 7 || !in_so(rep, a))
        throw std::invalid_argument("spin_lift: input is not in so(V)");
    Mat t(8, 8);
    for (std::size_t i = 0; i < 3; ++i) {
        t += rep.phi(i) * rep.phi_of(a * Vec::unit(7, i + 4));
        t += rep.phi(i + 4) * rep.phi_of(a * Vec::unit(7, i));
    }
    t -= rep.phi(3) * rep.phi_of(a * Vec::unit(7, 3));
    t = QSqrt2(Rational(1, 4)) * t;
    for (std::size_t j = 0; j < 7; ++j) {
        if (commutator(t, rep.phi(j)) != rep.phi_of(a * Vec::unit(7, j)))
            throw std::logic_error("spin_lift: commutator action mismatch");
    }
    if (!rep.in_spin(t)) throw std::logic_error("spin_lift: image not in spin(V)");
    return t;
}

// Inverse direction: the so(V)-matrix of ad(xi) on V through Phi.
inline Mat lambda_star(const CliffordRep& rep, const Mat& xi) {
    std::vector<Vec> phi_cols;
    for (std::size_t i = 0; i < 7; ++i) phi_cols.push_back(flatten(rep.phi(i)));
    Mat phi_flat = Mat::from_columns(phi_cols);
    Mat a(7, 7);
    for (std::size_t j = 0; j < 7; ++j) {
        SolveResult s = solve(phi_flat, flatten(commutator(xi, rep.phi(j))));
        if (s.kind != SolveKind::Unique)
            throw std::invalid_argument("lambda_star: commutator does not preserve Phi(V)");
        for (std::size_t i = 0; i < 7; ++i) a(i, j) = s.particular[i];
    }
    return a;
}

// ------------------------------------------------------------- stabilizers

// Basis of { xi in spin(V) : xi . psi = 0 for every given psi }. For an empty
// list this is all of spin(V).
inline std::vector<Mat> stabilizer_algebra(const CliffordRep& rep,
                                           const std::vector<Spinor>& spinors) {
    const std::vector<Mat>& sb = rep.spin_basis();
    std::vector<Vec> cols;
    for (const Mat& xi : sb) {
        Vec col(8 * spinors.size());
        for (std::size_t k = 0; k < spinors.size(); ++k) {
            Spinor im = xi * spinors[k];
            for (std::size_t r = 0; r < 8; ++r) col[8 * k + r] = im[r];
        }
        cols.push_back(std::move(col));
    }
    std::vector<Mat> out;
    if (spinors.empty()) {
        out = sb;
    } else {
        for (const Vec& c : kernel(Mat::from_columns(cols))) {
            Mat xi(8, 8);
            for (std::size_t a = 0; a < sb.size(); ++a)
                if (!c[a].is_zero()) xi += c[a] * sb[a];
            out.push_back(std::move(xi));
        }
    }
    // bracket closure, re-verified on the computed basis
    std::vector<Vec> flats;
    for (const Mat& m : out) flats.push_back(flatten(m));
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            Mat br = commutator(out[i], out[j]);
            for (const Spinor& psi : spinors)
                if (!(br * psi).is_zero())
                    throw std::logic_error("stabilizer_algebra: bracket does not stabilize");
            if (!flats.empty() && !in_span(flats, flatten(br)))
                throw std::logic_error("stabilizer_algebra: bracket leaves the span");
        }
    return out;
}

// U_phi = { X in V : X . phi = 0 }, with the extra geometry verified when phi
// is isotropic and nonzero.
struct KernelSpace {
    std::vector<Vec> basis;
    Report report;
};

inline KernelSpace kernel_space(const CliffordRep& rep, const Spinor& phi) {
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < 7; ++i) cols.push_back(rep.phi(i) * phi);
    KernelSpace out;
    out.basis = kernel(Mat::from_columns(cols));
    out.report.quantities["dim"] = std::to_string(out.basis.size());
    if (!phi.is_zero() && rep.spinor_form().eval(phi, phi).is_zero()) {
        out.report.add("kernel-dimension-3", out.basis.size() == 3);
        bool isotropic = true;
        for (const Vec& x : out.basis)
            for (const Vec& y : out.basis)
                if (!rep.witt_form().eval(x, y).is_zero()) isotropic = false;
        out.report.add("kernel-totally-isotropic", isotropic);
        // U_phi^perp . phi is contained in the line through phi
        Mat perp_rows(out.basis.size(), 7);
        for (std::size_t r = 0; r < out.basis.size(); ++r)
            for (std::size_t c = 0; c < 7; ++c)
                perp_rows(r, c) = rep.witt_form().eval(out.basis[r], Vec::unit(7, c));
        bool line = true;
        for (const Vec& x : kernel(perp_rows))
            if (!in_span({phi}, rep.act(x, phi))) line = false;
        out.report.add("perp-action-preserves-line", line);
    }
    return out;
}

// -------------------------------------------- pair stabilizer fine structure

// Named elements of the stabilizer of (s1+s5, s6), as matrices through Phi.
struct PairStabilizerElements {
    Mat h, e, f;          // e1e5 - e2e6, e1e6, e2e5
    Mat z1, z2;           // e1e3, e2e3
    Mat n1, n2, n3;       // e3e5 - sqrt2 e2e4, e3e6 + sqrt2 e1e4, e1e2 + sqrt2 e3e4
    std::vector<Mat> all() const { return {h, e, f, z1, z2, n1, n2, n3}; }
};

inline PairStabilizerElements pair_stabilizer_elements(const CliffordRep& rep) {
    auto p = [&](std::size_t i, std::size_t j) { return rep.phi(i - 1) * rep.phi(j - 1); };
    const QSqrt2 rt2 = QSqrt2::sqrt2();
    PairStabilizerElements g;
    g.h = p(1, 5) - p(2, 6);
    g.e = p(1, 6);
    g.f = p(2, 5);
    g.z1 = p(1, 3);
    g.z2 = p(2, 3);
    g.n1 = p(3, 5) - rt2 * p(2, 4);
    g.n2 = p(3, 6) + rt2 * p(1, 4);
    g.n3 = p(1, 2) + rt2 * p(3, 4);
    return g;
}

// Verifies the bracket structure of the pair stabilizer inside the matrix
// algebra: the N-brackets, the sl2 relations of {e,f,h}, centrality of z1, z2
// in m = span{z1,z2,n1,n2,n3}, and that m is an ideal of the full stabilizer.
inline Report check_pair_stabilizer_structure(const CliffordRep& rep) {
    Report rpt;
    PairStabilizerElements g = pair_stabilizer_elements(rep);
    const Spinor psi = standard_nonisotropic_spinor();
    const Spinor phi = standard_isotropic_spinor();

    bool kills = true;
    for (const Mat& x : g.all())
        if (!(x * psi).is_zero() || !(x * phi).is_zero()) kills = false;
    rpt.add("generators-stabilize-pair", kills);

    std::vector<Mat> stab = stabilizer_algebra(rep, {psi, phi});
    rpt.add("stabilizer-dimension-8", stab.size() == 8,
            "dim = " + std::to_string(stab.size()));
    std::vector<Vec> stab_flat, gen_flat;
    for (const Mat& m : stab) stab_flat.push_back(flatten(m));
    for (const Mat& m : g.all()) gen_flat.push_back(flatten(m));
    rpt.add("generators-span-stabilizer", same_span(stab_flat, gen_flat));

    auto is_multiple = [](const Mat& x, const Mat& y, const QSqrt2& c) {
        return x == c * y;
    };
    rpt.add("[n1,n2] = -4 n3", is_multiple(commutator(g.n1, g.n2), g.n3, QSqrt2(-4)));
    rpt.add("[n1,n3] = 6 z2", is_multiple(commutator(g.n1, g.n3), g.z2, QSqrt2(6)));
    rpt.add("[n2,n3] = -6 z1", is_multiple(commutator(g.n2, g.n3), g.z1, QSqrt2(-6)));

    rpt.add("[e,f] = -2 h", is_multiple(commutator(g.e, g.f), g.h, QSqrt2(-2)));
    rpt.add("[h,e] = -4 e", is_multiple(commutator(g.h, g.e), g.e, QSqrt2(-4)));
    rpt.add("[h,f] = 4 f", is_multiple(commutator(g.h, g.f), g.f, QSqrt2(4)));

    std::vector<Vec> m_flat = {flatten(g.z1), flatten(g.z2),
                               flatten(g.n1), flatten(g.n2),
                               flatten(g.n3)};
    std::vector<Mat> m_elems = {g.z1, g.z2, g.n1, g.n2, g.n3};
    bool central = true;
    for (const Mat& z : {g.z1, g.z2})
        for (const Mat& m : m_elems)
            if (!commutator(z, m).is_zero()) central = false;
    rpt.add("z1,z2-central-in-m", central);

    bool ideal = true;
    for (const Mat& x : g.all())
        for (const Mat& m : m_elems)
            if (!in_span(m_flat, flatten(commutator(x, m)))) ideal = false;
    rpt.add("m-ideal-of-stabilizer", ideal);
    return rpt;
}

// -------------------------------------------------------------- full audit

// Every representation-level invariant in one report: the 28 Clifford
// relations, the type-one volume normalization, invariance of the spinor
// inner product on all 448 basis instances, the spin <-> so round trip,
// stabilizer dimensions, and the kernel geometry of the two reference
// spinors.
inline Report spinor_audit(const CliffordRep& rep) {
    Report rpt;
    const Mat& g = rep.witt_form().gram();

    bool clifford_ok = true;
    int relations = 0;
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i; j < 7; ++j) {
            ++relations;
            Mat r = rep.phi(i) * rep.phi(j) + rep.phi(j) * rep.phi(i) +
                    (QSqrt2(2) * g(i, j)) * Mat::identity(8);
            if (!r.is_zero()) clifford_ok = false;
        }
    rpt.add("clifford-relations", clifford_ok, std::to_string(relations) + " relations");

    Mat vol = Mat::identity(8);
    for (std::size_t k : rep.volume_ordering()) vol = vol * rep.phi_of(rep.orthonormal_basis()[k]);
    rpt.add("volume-element-plus-id", vol == Mat::identity(8));
    {
        std::string order;
        for (std::size_t k : rep.volume_ordering()) order += std::to_string(k + 1) + " ";
        rpt.quantities["volume-ordering"] = order;
    }

    bool ipd = true;
    int instances = 0;
    const Mat& gd = rep.spinor_form().gram();
    for (std::size_t i = 0; i < 7; ++i) {
        Mat r = rep.phi(i).transposed() * gd + gd * rep.phi(i);
        for (std::size_t a = 0; a < 8; ++a)
            for (std::size_t b = 0; b < 8; ++b) {
                ++instances;
                if (!r(a, b).is_zero()) ipd = false;
            }
    }
    rpt.add("spinor-form-invariance", ipd, std::to_string(instances) + " instances");

    bool lift_ok = true;
    for (const Mat& a : so_basis(rep)) {
        try {
            if (lambda_star(rep, spin_lift(rep, a)) != a) lift_ok = false;
        } catch (const std::exception&) {
            lift_ok = false;
        }
    }
    rpt.add("spin-lift-round-trip", lift_ok, "21 so-basis elements");

    const Spinor psi = standard_nonisotropic_spinor();
    const Spinor phi = standard_isotropic_spinor();
    std::vector<Mat> stab1 = stabilizer_algebra(rep, {psi});
    rpt.add("stabilizer-dim-14", stab1.size() == 14, "dim = " + std::to_string(stab1.size()));
    {
        // bracket closure of the computed stabilizer, re-verified explicitly
        std::vector<Vec> flats;
        for (const Mat& m : stab1) flats.push_back(flatten(m));
        bool closed = true;
        for (std::size_t i = 0; i < stab1.size() && closed; ++i)
            for (std::size_t j = i + 1; j < stab1.size() && closed; ++j) {
                Mat br = commutator(stab1[i], stab1[j]);
                if (!(br * psi).is_zero() || !in_span(flats, flatten(br))) closed = false;
            }
        rpt.add("stabilizer-bracket-closed", closed);
    }
    rpt.merge(check_pair_stabilizer_structure(rep), "pair-");

    KernelSpace ks = kernel_space(rep, phi);
    rpt.merge(ks.report, "kernel-s6-");
    std::vector<Vec> expected = {Vec::unit(7, 0), Vec::unit(7, 1), Vec::unit(7, 2)};
    rpt.add("kernel-s6-span-e1e2e3", same_span(ks.basis, expected));

    // for the non-isotropic spinor, X -> X.psi is injective with image in psi-perp
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < 7; ++i) cols.push_back(rep.phi(i) * psi);
    rpt.add("multiplication-rank-7", rank(Mat::from_columns(cols)) == 7);
    bool im_perp = true;
    for (std::size_t i = 0; i < 7; ++i)
        if (!rep.spinor_form().eval(cols[i], psi).is_zero()) im_perp = false;
    rpt.add("multiplication-image-in-perp", im_perp);
    return rpt;
}

}  // namespace g2syms
