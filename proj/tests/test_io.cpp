#include "g2syms/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace g2syms;

namespace {
bool same_constants(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a.basis_bracket(i, j) != b.basis_bracket(i, j)) return false;
    return true;
}
}  // namespace

TEST_CASE("scalar encoding round-trips, including oversized integers") {
    std::mt19937 rng(3141);
    std::uniform_int_distribution<int> num(-99, 99), den(1, 99);
    for (int it = 0; it < 200; ++it) {
        QSqrt2 x(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        CHECK(scalar_from_json(scalar_to_json(x)) == x);
    }
    // numerators beyond 64 bits fall back to decimal strings
    BigInt huge = BigInt("123456789012345678901234567890123456789");
    QSqrt2 big(Rational(huge, 7), Rational(1, huge));
    Json j = scalar_to_json(big);
    CHECK(j[0][0].is_string());
    CHECK(scalar_from_json(j) == big);
}

TEST_CASE("scalar encoding places denominators in the fixed slots") {
    QSqrt2 x(Rational(1, 2), Rational(-3, 4));  // 1/2 - (3/4) sqrt2
    Json j = scalar_to_json(x);
    CHECK(j[0][0].get<std::int64_t>() == 1);
    CHECK(j[0][1].get<std::int64_t>() == 2);
    CHECK(j[1][0].get<std::int64_t>() == -3);
    CHECK(j[1][1].get<std::int64_t>() == 4);
}

TEST_CASE("catalog triple files round-trip and recertify") {
    CatalogTriple ct = build_family({Family::F1, Signature{2, 0, 0}, QSqrt2(Rational(1, 2))});
    Json j = catalog_triple_to_json(ct);
    TripleFile tf = triple_from_json(j);
    CHECK(same_constants(tf.triple.algebra(), ct.triple.algebra()));
    CHECK(tf.triple.theta() == ct.triple.theta());
    CHECK(tf.triple.ip().gram() == ct.triple.ip().gram());
    CHECK(tf.omega.omega == ct.omega.omega);
    Report rpt = certify(tf.triple, tf.omega);
    INFO(rpt.summary());
    CHECK(rpt.all_pass());
}

TEST_CASE("lie algebra and cocycle schemas round-trip") {
    LieAlgebra l(4, {"L1", "L2", "L3", "B"});
    l.set_bracket(1, 2, Vec::unit(4, 3));
    l.set_bracket(2, 3, QSqrt2::sqrt2() * Vec::unit(4, 0) - Vec::unit(4, 1));
    LieAlgebra back = lie_from_json(lie_to_json(l));
    CHECK(same_constants(l, back));
    CHECK(back.labels() == l.labels());

    QuadraticCocycle c = QuadraticCocycle::zero(4, 2);
    c.alpha.set(3, 1, -QSqrt2::sqrt2() * Vec::unit(2, 0));
    c.gamma.set(3, 0, 2, QSqrt2(Rational(1, 3)));
    QuadraticCocycle cc = cocycle_from_json(cocycle_to_json(c), 4, 2);
    CHECK(cc == c);
}

TEST_CASE("malformed inputs are rejected with parse errors") {
    CHECK_THROWS_AS(scalar_from_json(Json::parse("[[1,0],[0,1]]")), ParseError);   // q = 0
    CHECK_THROWS_AS(scalar_from_json(Json::parse("[1,2]")), ParseError);
    CHECK_THROWS_AS(lie_from_json(Json::parse(R"({"dim":2,"brackets":[[1,1,[]]]})")), ParseError);
    CHECK_THROWS_AS(lie_from_json(Json::parse(R"({"dim":2,"brackets":[[0,1,[[5,[[1,1],[0,1]]]]]]})")),
                    ParseError);
    Json bad_triple = catalog_triple_to_json(build_family({Family::F2b, Signature{1, 0, 0}, QSqrt2(0)}));
    bad_triple["metric"] = Json::array({Json::array({scalar_to_json(QSqrt2(1))})});
    CHECK_THROWS_AS(triple_from_json(bad_triple), ParseError);
}
