#include "g2syms/lie.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace g2syms;

namespace {

LieAlgebra abelian(std::size_t n) { return LieAlgebra(n); }

// three-dimensional Heisenberg algebra [X,Y] = Z
LieAlgebra heisenberg() {
    LieAlgebra l(3, {"X", "Y", "Z"});
    l.set_bracket(0, 1, Vec::unit(3, 2));
    return l;
}

// the four-dimensional nilpotent algebra B = [L2,L3], [B,L3] = L1
LieAlgebra g41() {
    LieAlgebra l(4, {"L1", "L2", "L3", "B"});
    l.set_bracket(1, 2, Vec::unit(4, 3));
    l.set_bracket(2, 3, -Vec::unit(4, 0));  // [L3,B] = -L1
    return l;
}

// mutation of g41: the bracket [B,L3] = L1 replaced by [B,L2] = L1
LieAlgebra g41_mutated() {
    LieAlgebra l(4, {"L1", "L2", "L3", "B"});
    l.set_bracket(1, 2, Vec::unit(4, 3));
    l.set_bracket(1, 3, -Vec::unit(4, 0));  // [L2,B] = -L1
    return l;
}

// so(3) with the identity metric and the reflection fixing the third axis;
// the compact rank-one symmetric triple
MetricInvolutiveLie sphere_triple() {
    LieAlgebra l(3, {"E1", "E2", "E3"});
    l.set_bracket(0, 1, Vec::unit(3, 2));
    l.set_bracket(1, 2, Vec::unit(3, 0));
    l.set_bracket(0, 2, -Vec::unit(3, 1));
    Mat theta(3, 3);
    theta(0, 0) = -1;
    theta(1, 1) = -1;
    theta(2, 2) = 1;
    return MetricInvolutiveLie(std::move(l), std::move(theta), SymmetricForm(Mat::identity(3)));
}

MetricInvolutiveLie flat_indefinite_plane() {
    Mat theta = -Mat::identity(2);
    Mat g(2, 2);
    g(0, 0) = 1;
    g(1, 1) = -1;
    return MetricInvolutiveLie(abelian(2), std::move(theta), SymmetricForm(std::move(g)));
}

}  // namespace

TEST_CASE("jacobi checker") {
    CHECK(jacobi_check(abelian(4)).all_pass());
    CHECK(jacobi_check(heisenberg()).all_pass());
    CHECK(jacobi_check(g41()).all_pass());
    // the mutated algebra happens to satisfy jacobi as well; it is flagged
    // downstream by the cocycle conditions, not here
    CHECK(jacobi_check(g41_mutated()).all_pass());

    LieAlgebra bad(3, {"x", "y", "z"});
    bad.set_bracket(0, 1, Vec::unit(3, 0));  // [x,y] = x
    bad.set_bracket(0, 2, Vec::unit(3, 2));  // [x,z] = z
    Report rpt = jacobi_check(bad);
    CHECK(rpt.any_fail());
    CHECK(rpt.checks[0].details.find("x") != std::string::npos);
}

TEST_CASE("killing forms of nilpotent algebras vanish") {
    CHECK(killing_form(heisenberg()).gram().is_zero());
    CHECK(killing_form(g41()).gram().is_zero());

    LieAlgebra solvable(2, {"x", "y"});
    solvable.set_bracket(0, 1, Vec::unit(2, 1));  // [x,y] = y
    CHECK_FALSE(killing_form(solvable).gram().is_zero());
}

TEST_CASE("killing form is symmetric and ad-invariant for jacobi algebras") {
    for (const LieAlgebra& l : {heisenberg(), g41(), sphere_triple().algebra()}) {
        REQUIRE(jacobi_check(l).all_pass());
        SymmetricForm k = killing_form(l);
        std::size_t n = l.dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t m = 0; m < n; ++m) {
                    Vec x = Vec::unit(n, i), y = Vec::unit(n, j), z = Vec::unit(n, m);
                    CHECK(k.eval(l.bracket(x, y), z) == k.eval(x, l.bracket(y, z)));
                }
    }
}

TEST_CASE("lower central series and nilpotency") {
    CHECK(is_nilpotent(abelian(3)).nilpotency_class == 1);
    CHECK(is_nilpotent(heisenberg()).nilpotency_class == 2);
    Nilpotency n41 = is_nilpotent(g41());
    CHECK(n41.nilpotent);
    CHECK(n41.nilpotency_class == 3);

    LieAlgebra solvable(2);
    solvable.set_bracket(0, 1, Vec::unit(2, 1));
    CHECK_FALSE(is_nilpotent(solvable).nilpotent);
}

TEST_CASE("metric invariance of the sphere triple") {
    Report rpt = metric_invariance(sphere_triple());
    INFO(rpt.summary());
    CHECK(rpt.all_pass());
}

TEST_CASE("metric invariance mutations are itemized") {
    MetricInvolutiveLie t = sphere_triple();
    // perturbed metric entry
    Mat g = Mat::identity(3);
    g(0, 1) = g(1, 0) = 1;
    MetricInvolutiveLie bad_metric(t.algebra(), t.theta(), SymmetricForm(std::move(g)));
    Report r1 = metric_invariance(bad_metric);
    CHECK(r1.any_fail());

    // theta replaced by the identity: g- collapses and cannot source g+
    MetricInvolutiveLie bad_theta(t.algebra(), Mat::identity(3), t.ip());
    Report r2 = metric_invariance(bad_theta);
    CHECK(r2.find("minus-brackets-span-plus")->verdict == Verdict::Fail);
}

TEST_CASE("holonomy of the sphere triple") {
    HolonomyData h = holonomy_algebra(sphere_triple());
    REQUIRE(h.well_defined);
    CHECK(h.matrices.size() == 1);
    CHECK(h.dimension == 1);
    CHECK(h.abelian);
    // bracket closure of the holonomy span
    for (const Mat& a : h.matrices)
        for (const Mat& b : h.matrices) {
            std::vector<Vec> flats;
            for (const Mat& m : h.matrices) flats.push_back(flatten(m));
            CHECK(in_span(flats, flatten(commutator(a, b))));
        }
}

TEST_CASE("indecomposability: flat indefinite plane splits") {
    IndecomposabilityResult r = indecomposability(flat_indefinite_plane());
    REQUIRE(r.verdict == Decomposability::Decomposable);
    REQUIRE(r.projector.has_value());
    const Mat& p = *r.projector;
    CHECK(p * p == p);
    CHECK_FALSE(p.is_zero());
    CHECK(p != Mat::identity(2));
}

TEST_CASE("indecomposability: direct sum of two sphere triples splits") {
    MetricInvolutiveLie two = direct_sum(sphere_triple(), sphere_triple());
    REQUIRE(metric_invariance(two).all_pass());
    IndecomposabilityResult r = indecomposability(two);
    CHECK(r.verdict == Decomposability::Decomposable);
    REQUIRE(r.projector.has_value());
    HolonomyData h = holonomy_algebra(two);
    for (const Mat& m : h.matrices) CHECK(commutator(*r.projector, m).is_zero());
}

TEST_CASE("indecomposability: sphere triple is never reported decomposable") {
    IndecomposabilityResult r = indecomposability(sphere_triple());
    CHECK(r.verdict != Decomposability::Decomposable);
}

TEST_CASE("exact square roots in the scalar field") {
    using poly::exact_sqrt;
    CHECK(exact_sqrt(QSqrt2(Rational(9, 4))) == QSqrt2(Rational(3, 2)));
    CHECK(exact_sqrt(QSqrt2(2)) == QSqrt2::sqrt2());
    // 3 + 2 sqrt2 = (1 + sqrt2)^2
    CHECK(exact_sqrt(QSqrt2(Rational(3), Rational(2))) == QSqrt2(Rational(1), Rational(1)));
    CHECK_FALSE(exact_sqrt(QSqrt2(3)).has_value());
    CHECK_FALSE(exact_sqrt(QSqrt2(-1)).has_value());
    CHECK_FALSE(exact_sqrt(QSqrt2(Rational(1), Rational(1))).has_value());
}

TEST_CASE("hyperbolic plane splits via the minimal-polynomial path") {
    // with no matrices and the hyperbolic metric, the self-adjoint commutant
    // basis contains no integer-combination idempotent; the splitting must be
    // found through a coprime factor of a minimal polynomial
    Mat g(2, 2);
    g(0, 1) = g(1, 0) = 1;
    IndecomposabilityResult r = indecomposability_of_rep({}, SymmetricForm(g));
    REQUIRE(r.verdict == Decomposability::Decomposable);
    const Mat& p = *r.projector;
    CHECK(p * p == p);
    CHECK(g * p == (g * p).transposed());
    // the image line is nondegenerate
    std::vector<Vec> image;
    for (std::size_t j = 0; j < 2; ++j) {
        Vec c = p.col(j);
        if (!c.is_zero()) image.push_back(c);
    }
    REQUIRE_FALSE(image.empty());
    Vec v = image[0];
    QSqrt2 vv = SymmetricForm(g).eval(v, v);
    CHECK_FALSE(vv.is_zero());
}

TEST_CASE("degenerate metric is rejected") {
    Mat g(2, 2);
    g(0, 0) = 1;
    MetricInvolutiveLie t(abelian(2), -Mat::identity(2), SymmetricForm(std::move(g)));
    CHECK_THROWS_AS(indecomposability(t), std::invalid_argument);
}

TEST_CASE("tier-1 certificates never contradict brute-force coordinate splittings") {
    // randomized small metric representations: diagonal +-1 metric, a few
    // skew matrices; when tier 1 certifies indecomposability, no proper
    // invariant nondegenerate coordinate subspace may exist
    std::mt19937 rng(56104);
    std::uniform_int_distribution<int> small(-2, 2), sign(0, 1);
    const std::size_t n = 4;
    for (int trial = 0; trial < 60; ++trial) {
        Mat g(n, n);
        for (std::size_t i = 0; i < n; ++i) g(i, i) = sign(rng) ? 1 : -1;
        SymmetricForm metric(g);
        Mat ginv = inverse(g);
        std::vector<Mat> mats;
        std::size_t count = 1 + trial % 2;
        for (std::size_t m = 0; m < count; ++m) {
            Mat s(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    s(i, j) = small(rng);
                    s(j, i) = -s(i, j);
                }
            mats.push_back(ginv * s);  // skew with respect to the metric
        }
        IndecomposabilityResult r = indecomposability_of_rep(mats, metric);
        if (r.verdict != Decomposability::Indecomposable) continue;

        // brute force over coordinate subsets
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) idx.push_back(i);
            std::vector<Vec> w;
            for (std::size_t i : idx) w.push_back(Vec::unit(n, i));
            bool invariant = true;
            for (const Mat& m : mats)
                for (const Vec& v : w)
                    if (!in_span(w, m * v)) invariant = false;
            if (!invariant) continue;
            Mat sub(idx.size(), idx.size());
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = g(idx[a], idx[b]);
            bool nondegenerate = rank(sub) == idx.size();
            INFO("trial " << trial << " mask " << mask);
            CHECK_FALSE(nondegenerate);  // a nondegenerate invariant coordinate
                                         // splitting would contradict tier 1
        }
    }
}
