#pragma once

// The classified indecomposable triples as executable constructors, plus the
// end-to-end certification pipeline. Built triples use the canonical basis
// order Z1, Z2, Z3, A, L1, L2, L3 | ZB, (A1,) B: the minus part occupies the
// first seven coordinates, which pins the 3-form index convention.

#include "g2syms/g2form.hpp"
#include "g2syms/lie.hpp"
#include "g2syms/quadext.hpp"
#include "g2syms/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2syms {

enum class Family { F1, F2a, F2b };

inline const char* to_string(Family f) {
    switch (f) {
        case Family::F1: return "1";
        case Family::F2a: return "2a";
        default: return "2b";
    }
}

struct FamilySpec {
    Family family = Family::F1;
    Signature a_signature{1, 1, 0};  // used by families 1 and 2a; fixed for 2b
    QSqrt2 t = QSqrt2(0);            // used by family 1 only

    std::string name() const {
        std::string s = "family ";
        s += to_string(family);
        if (family != Family::F2b) {
            s += " a-sig (" + std::to_string(a_signature.neg) + "," +
                 std::to_string(a_signature.pos) + ")";
        }
        if (family == Family::F1) s += " t = " + t.str();
        return s;
    }
};

// the nine specs exercised by the acceptance sweep
inline std::vector<FamilySpec> catalog_sweep() {
    std::vector<FamilySpec> out;
    for (Signature sig : {Signature{1, 1, 0}, Signature{2, 0, 0}})
        for (QSqrt2 t : {QSqrt2(-1), QSqrt2(0), QSqrt2(Rational(1, 2)), QSqrt2(1)})
            out.push_back({Family::F1, sig, t});
    out.push_back({Family::F2a, Signature{1, 1, 0}, QSqrt2(0)});
    out.push_back({Family::F2a, Signature{2, 0, 0}, QSqrt2(0)});
    out.push_back({Family::F2b, Signature{1, 0, 0}, QSqrt2(0)});
    return out;
}

struct CatalogTriple {
    FamilySpec spec;
    MetricInvolutiveLie triple;
    GStructure omega;  // on the first seven (minus) coordinates
};

namespace catalog_detail {

inline LieAlgebra base_algebra(Family f) {
    LieAlgebra l(4, {"L1", "L2", "L3", "B"});
    l.set_bracket(1, 2, Vec::unit(4, 3));                        // [L2,L3] = B
    if (f == Family::F1) l.set_bracket(2, 3, -Vec::unit(4, 0));  // [B,L3] = L1
    return l;
}

inline Mat base_theta() {
    Mat t = -Mat::identity(4);
    t(3, 3) = 1;
    return t;
}

inline LieWithBStructure base_bstructure(Family f) {
    return LieWithBStructure(base_algebra(f), base_theta(), Vec::unit(4, 0), Vec::unit(4, 1),
                             QSqrt2::sqrt2() * Vec::unit(4, 2));
}

inline OrthogonalModule base_module(const FamilySpec& spec) {
    if (spec.family == Family::F2b) {
        Mat g(1, 1);
        g(0, 0) = -1;
        return OrthogonalModule::make(SymmetricForm(std::move(g)), Vec::unit(1, 0), 4);
    }
    if (!(spec.a_signature == Signature{1, 1, 0} || spec.a_signature == Signature{2, 0, 0}))
        throw std::invalid_argument("catalog: a-signature must be (1,1) or (2,0)");
    Mat g(2, 2);
    g(0, 0) = -1;
    g(1, 1) = spec.a_signature == Signature{1, 1, 0} ? 1 : -1;
    return OrthogonalModule::make(SymmetricForm(std::move(g)), Vec::unit(2, 0), 4);
}

inline QuadraticCocycle base_cocycle(const FamilySpec& spec) {
    if (spec.family == Family::F1) {
        QuadraticCocycle c = QuadraticCocycle::zero(4, 2);
        c.alpha.set(3, 1, -QSqrt2::sqrt2() * Vec::unit(2, 0));  // alpha(B, L2) = -sqrt2 A
        c.alpha.set(0, 2, Vec::unit(2, 1));                     // alpha(L1, L3) = A1
        if (!spec.t.is_zero()) c.gamma.set(3, 0, 2, spec.t);    // gamma = t ZB ^ Z1 ^ Z3
        return c;
    }
    std::size_t ad = spec.family == Family::F2a ? 2 : 1;
    QuadraticCocycle c = QuadraticCocycle::zero(4, ad);
    c.alpha.set(3, 2, Vec::unit(ad, 0));                        // alpha(B, L3) = A
    if (ad == 2) c.alpha.set(0, 2, Vec::unit(ad, 1));           // alpha(L1, L3) = A1
    c.gamma.set(3, 0, 1, QSqrt2::inv_sqrt2());                  // gamma = ZB^Z1^Z2 / sqrt2
    return c;
}

// permutation sending the natural model order l* + a + l to the canonical
// order; columns are the new basis vectors
inline Mat canonical_permutation(const StandardModel& sm) {
    std::size_t n = sm.dim();
    std::vector<std::size_t> order = {sm.z(0), sm.z(1), sm.z(2), sm.a(0),
                                      sm.l(0), sm.l(1), sm.l(2), sm.z(3)};
    for (std::size_t k = 1; k < sm.a_dim; ++k) order.push_back(sm.a(k));
    order.push_back(sm.l(3));
    Mat p(n, n);
    for (std::size_t k = 0; k < n; ++k) p(order[k], k) = 1;
    return p;
}

}  // namespace catalog_detail

// Builds the canonical-order triple from explicitly supplied cocycle data;
// the certain way to study mutated inputs. build_family feeds it the
// classification data.
inline CatalogTriple build_from_cocycle(const FamilySpec& spec, const QuadraticCocycle& c) {
    using namespace catalog_detail;
    LieAlgebra l = base_algebra(spec.family);
    Mat theta_l = base_theta();
    OrthogonalModule mod = base_module(spec);
    StandardModel sm = build_standard_model(l, theta_l, mod, c);
    ModelOmega mo = standard_omega(base_bstructure(spec.family), mod, sm);

    Mat p = canonical_permutation(sm);
    std::vector<std::string> labels = {"Z1", "Z2", "Z3", "A", "L1", "L2", "L3", "ZB"};
    if (sm.a_dim == 2) labels.push_back("A1");
    labels.push_back("B");

    LieAlgebra alg = sm.triple.algebra().change_basis(p, labels);
    Mat theta = inverse(p) * sm.triple.theta() * p;
    SymmetricForm ip = sm.triple.ip().pulled_back(p);
    MetricInvolutiveLie triple(std::move(alg), std::move(theta), std::move(ip));

    // omega in canonical coordinates; the minus part is the first seven
    Alt3<QSqrt2> omega7(7, QSqrt2(0));
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = i + 1; j < 7; ++j)
            for (std::size_t k = j + 1; k < 7; ++k) {
                QSqrt2 v = mo.omega.eval(p.col(i), p.col(j), p.col(k));
                if (!v.is_zero()) omega7.set(i, j, k, v);
            }
    Mat minus_gram(7, 7);
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) minus_gram(i, j) = triple.ip().gram()(i, j);
    GStructure g{std::move(omega7), SymmetricForm(std::move(minus_gram)), Mat::identity(7)};
    return CatalogTriple{spec, std::move(triple), std::move(g)};
}

inline CatalogTriple build_family(const FamilySpec& spec) {
    if (spec.family != Family::F1 && !spec.t.is_zero())
        throw std::invalid_argument("catalog: only family 1 carries the parameter t");
    return build_from_cocycle(spec, catalog_detail::base_cocycle(spec));
}

// --------------------------------------------- canonical isotropic ideal

// Structure of the cross product against the canonical isotropic directions:
// with i- = span{Z1, Z2, Z3} and its perp i- + R.A, the product maps
// i-perp x i-perp into i-, n* = b(i-, i-) is a nonzero line killed by i- and
// preserved by i-perp, and A acts on n* as a positive multiple.
inline Report isotropic_ideal_structure_check(const GStructure& omega) {
    Report rpt;
    CrossProduct b = cross_from_form(omega);
    std::vector<Vec> iminus = {Vec::unit(7, 0), Vec::unit(7, 1), Vec::unit(7, 2)};
    std::vector<Vec> iperp = iminus;
    iperp.push_back(Vec::unit(7, 3));

    bool into = true;
    for (std::size_t a = 0; a < iperp.size(); ++a)
        for (std::size_t c = a + 1; c < iperp.size(); ++c)
            if (!in_span(iminus, b.eval(iperp[a], iperp[c]))) into = false;
    rpt.add("perp-products-in-iminus", into);

    std::vector<Vec> nstar_gens;
    for (std::size_t a = 0; a < iminus.size(); ++a)
        for (std::size_t c = a + 1; c < iminus.size(); ++c) {
            Vec v = b.eval(iminus[a], iminus[c]);
            if (!v.is_zero()) nstar_gens.push_back(std::move(v));
        }
    std::vector<Vec> nstar = span_basis(nstar_gens);
    rpt.add("nstar-nonzero", !nstar.empty(),
            "dim n* = " + std::to_string(nstar.size()));

    bool killed = true;
    for (const Vec& u : nstar)
        for (const Vec& x : iminus)
            if (!b.eval(u, x).is_zero()) killed = false;
    rpt.add("nstar-killed-by-iminus", killed);

    std::vector<Vec> image;
    for (const Vec& u : nstar)
        for (const Vec& x : iperp) {
            Vec v = b.eval(u, x);
            if (!v.is_zero()) image.push_back(std::move(v));
        }
    rpt.add("nstar-preserved-by-perp", same_span(image, nstar));

    bool positive = !nstar.empty();
    Vec a_vec = Vec::unit(7, 3);
    for (const Vec& u : nstar) {
        Vec bu = b.eval(a_vec, u);
        SolveResult s = solve(Mat::from_columns({u}), bu);
        if (s.kind != SolveKind::Unique || !(s.particular[0].sign() > 0)) positive = false;
    }
    rpt.add("timelike-direction-positively-oriented", positive);
    return rpt;
}

// ------------------------------------------------------------ certification

// Runs the full battery on a triple-with-3-form. Every check lands in the
// report; quantities carry the computed dimensions, classes, and signature.
inline Report certify(const MetricInvolutiveLie& triple, const GStructure& omega) {
    Report rpt;
    const LieAlgebra& alg = triple.algebra();
    std::size_t n = alg.dim();

    rpt.merge(jacobi_check(alg));
    rpt.merge(metric_invariance(triple));

    Signature sig = triple.minus_form().signature();
    rpt.add("minus-signature-(4,3)", sig == Signature{4, 3, 0},
            "(" + std::to_string(sig.neg) + "," + std::to_string(sig.pos) + "," +
                std::to_string(sig.null) + ")");
    rpt.quantities["signature-minus"] =
        "(" + std::to_string(sig.neg) + "," + std::to_string(sig.pos) + ")";

    // the 3-form's metric must be the restriction of the ambient one
    bool metric_match = omega.metric.dim() == 7 && n >= 7;
    if (metric_match)
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                if (omega.metric.gram()(i, j) != triple.ip().gram()(i, j)) metric_match = false;
    rpt.add("omega-metric-is-restriction", metric_match);
    rpt.merge(check_witt_normal_form(omega), "normalform-");

    // invariance of omega under the plus part, projecting brackets onto the
    // leading minus coordinates
    bool invariant = true;
    auto proj7 = [&](const Vec& v) {
        Vec w(7);
        for (std::size_t i = 0; i < 7 && i < v.size(); ++i) w[i] = v[i];
        return w;
    };
    for (const Vec& x : triple.plus_basis())
        for (std::size_t i = 0; i < 7 && invariant; ++i)
            for (std::size_t j = i + 1; j < 7 && invariant; ++j)
                for (std::size_t k = j + 1; k < 7 && invariant; ++k) {
                    Vec ei(n), ej(n), ek(n);
                    ei[i] = 1;
                    ej[j] = 1;
                    ek[k] = 1;
                    QSqrt2 v = omega.omega.eval(proj7(alg.bracket(x, ei)), proj7(ej), proj7(ek)) +
                               omega.omega.eval(proj7(ei), proj7(alg.bracket(x, ej)), proj7(ek)) +
                               omega.omega.eval(proj7(ei), proj7(ej), proj7(alg.bracket(x, ek)));
                    if (!v.is_zero()) invariant = false;
                }
    rpt.add("omega-plus-invariant", invariant);

    rpt.add("killing-form-zero", killing_form(alg).gram().is_zero());

    Nilpotency nil = is_nilpotent(alg);
    rpt.add("nilpotent", nil.nilpotent);
    rpt.quantities["nilpotency-class"] = std::to_string(nil.nilpotency_class);

    HolonomyData hol = holonomy_algebra(triple);
    rpt.add("holonomy-well-defined", hol.well_defined);
    if (hol.well_defined) {
        rpt.add("holonomy-abelian", hol.abelian);
        rpt.add("holonomy-dimension-equals-dim-gplus",
                hol.dimension == triple.plus_basis().size(),
                "dim = " + std::to_string(hol.dimension));
        rpt.quantities["holonomy-dimension"] = std::to_string(hol.dimension);
        rpt.quantities["dim-gplus"] = std::to_string(triple.plus_basis().size());
        if (hol.dimension != 3)
            rpt.notes.push_back("holonomy dimension is " + std::to_string(hol.dimension) +
                                " (= dim g+), smaller than the three-dimensional generic value");
        bool closed = true;
        std::vector<Vec> flats;
        for (const Mat& m : hol.matrices) flats.push_back(flatten(m));
        for (const Mat& a : hol.matrices)
            for (const Mat& b : hol.matrices)
                if (!in_span(flats, flatten(commutator(a, b)))) closed = false;
        rpt.add("holonomy-bracket-closed", closed);

        SymmetricForm mf = triple.minus_form();
        if (!mf.is_degenerate()) {
            IndecomposabilityResult ind = indecomposability_of_rep(hol.matrices, mf);
            Verdict v = ind.verdict == Decomposability::Indecomposable
                            ? Verdict::Pass
                            : (ind.verdict == Decomposability::Decomposable ? Verdict::Fail
                                                                            : Verdict::Inconclusive);
            rpt.add("indecomposable", v,
                    "commutant dim " + std::to_string(ind.commutant_dim) + ", semisimple quotient " +
                        std::to_string(ind.semisimple_quotient_dim));
            rpt.quantities["commutant-dimension"] = std::to_string(ind.commutant_dim);
            rpt.quantities["commutant-semisimple-dimension"] =
                std::to_string(ind.semisimple_quotient_dim);
        } else {
            rpt.add("indecomposable", Verdict::Fail, "metric on the minus part is degenerate");
        }
    } else {
        rpt.add("indecomposable", Verdict::Fail, "holonomy not well defined");
    }

    try {
        rpt.merge(check_cross_axioms(cross_from_form(omega)), "cross-");
        rpt.merge(isotropic_ideal_structure_check(omega), "ideal-");
    } catch (const std::exception& e) {
        rpt.add("cross-product-defined", false, e.what());
    }
    return rpt;
}

inline Report certify(const CatalogTriple& ct) { return certify(ct.triple, ct.omega); }

}  // namespace g2syms
