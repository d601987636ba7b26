#include "g2syms/linalg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace g2syms;

namespace {

QSqrt2 rt2() { return QSqrt2::sqrt2(); }

struct Gen {
    std::mt19937 rng{987123};
    QSqrt2 scalar() {
        std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
        return QSqrt2(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    }
    Mat matrix(std::size_t r, std::size_t c) {
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = scalar();
        return m;
    }
    Mat invertible(std::size_t n) {
        for (;;) {
            Mat m = matrix(n, n);
            if (rank(m) == n) return m;
        }
    }
    Vec vec(std::size_t n) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = scalar();
        return v;
    }
};

// Witt gram on the 7-dimensional quadratic space: three hyperbolic pairs
// (i, i+4) plus one negative square in slot 3 (0-based).
Mat witt_gram() {
    Mat g(7, 7);
    for (std::size_t i = 0; i < 3; ++i) {
        g(i, i + 4) = 1;
        g(i + 4, i) = 1;
    }
    g(3, 3) = -1;
    return g;
}

}  // namespace

TEST_CASE("solve: identity and inconsistent systems") {
    Gen gen;
    Vec b = gen.vec(5);
    SolveResult r = solve(Mat::identity(5), b);
    REQUIRE(r.kind == SolveKind::Unique);
    CHECK(r.particular == b);

    Vec b2(3);
    b2[1] = 1;
    CHECK(solve(Mat(3, 3), b2).kind == SolveKind::None);
    CHECK(kernel(Mat::identity(4)).empty());
    CHECK(kernel(Mat(4, 4)).size() == 4);
}

TEST_CASE("solve and kernel satisfy their defining equations exactly") {
    Gen gen;
    for (int it = 0; it < 40; ++it) {
        std::size_t r = 2 + it % 4, c = 2 + (it / 2) % 4;
        Mat a = gen.matrix(r, c);
        for (const Vec& k : kernel(a)) CHECK((a * k).is_zero());
        Vec x = gen.vec(c);
        Vec b = a * x;  // guaranteed consistent
        SolveResult s = solve(a, b);
        REQUIRE(s.kind != SolveKind::None);
        CHECK(a * s.particular == b);
        CHECK(s.nullspace.size() == c - rank(a));
    }
}

TEST_CASE("affine solve reports the full solution family") {
    Mat a(2, 3);
    a(0, 0) = 1;
    a(0, 2) = 1;
    a(1, 1) = 1;
    Vec b(2);
    b[0] = 2;
    b[1] = 3;
    SolveResult s = solve(a, b);
    REQUIRE(s.kind == SolveKind::Affine);
    REQUIRE(s.nullspace.size() == 1);
    CHECK(a * s.particular == b);
    CHECK((a * s.nullspace[0]).is_zero());
}

TEST_CASE("matrix product is associative") {
    Gen gen;
    for (int it = 0; it < 10; ++it) {
        Mat a = gen.matrix(3, 4), b = gen.matrix(4, 2), c = gen.matrix(2, 5);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("inverse round-trips") {
    Gen gen;
    for (int it = 0; it < 10; ++it) {
        Mat m = gen.invertible(4);
        CHECK(m * inverse(m) == Mat::identity(4));
    }
}

TEST_CASE("signature of the Witt form, identity, and spinor forms") {
    CHECK(SymmetricForm(witt_gram()).signature() == Signature{4, 3, 0});
    CHECK(SymmetricForm(Mat::identity(7)).signature() == Signature{0, 7, 0});
    // 2 sum dx_i dx_{i+4} on R^8
    Mat gd(8, 8);
    for (std::size_t i = 0; i < 4; ++i) {
        gd(i, i + 4) = 1;
        gd(i + 4, i) = 1;
    }
    CHECK(SymmetricForm(gd).signature() == Signature{4, 4, 0});
    // a degenerate direction is counted as null
    Mat g3(3, 3);
    g3(0, 0) = 1;
    g3(1, 1) = -1;
    CHECK(SymmetricForm(g3).signature() == Signature{1, 1, 1});
}

TEST_CASE("signature is a congruence invariant") {
    Gen gen;
    SymmetricForm witt(witt_gram());
    for (int it = 0; it < 50; ++it) {
        Mat s = gen.invertible(7);
        CHECK(witt.pulled_back(s).signature() == Signature{4, 3, 0});
    }
}

TEST_CASE("alternating forms evaluate by the determinant convention") {
    Alt3<QSqrt2> w(7, QSqrt2(0));
    w.set(0, 1, 6, rt2());
    w.set(0, 3, 4, QSqrt2(1));
    // (Z1 ^ Z3)(L1, L3) convention anchor: basis evaluation of a set coefficient is 1
    Alt2<QSqrt2> a(4, QSqrt2(0));
    a.set(0, 2, QSqrt2(1));
    CHECK(a.eval(Vec::unit(4, 0), Vec::unit(4, 2)) == QSqrt2(1));
    CHECK(a.eval(Vec::unit(4, 2), Vec::unit(4, 0)) == QSqrt2(-1));

    // swapping any two arguments flips the sign, exactly, on all basis tuples
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j)
            for (std::size_t k = 0; k < 7; ++k) {
                Vec x = Vec::unit(7, i), y = Vec::unit(7, j), z = Vec::unit(7, k);
                CHECK(w.eval(x, y, z) == -w.eval(y, x, z));
                CHECK(w.eval(x, y, z) == -w.eval(x, z, y));
                CHECK(w.eval(x, y, z) == -w.eval(z, y, x));
            }
    // storage normalizes index order with the permutation sign
    CHECK(w.get(6, 1, 0) == -rt2());
    CHECK(w.get(1, 0, 6) == -rt2());
    CHECK(w.get(0, 1, 2) == QSqrt2(0));
}

TEST_CASE("vector-valued alternating forms") {
    Vec zero(3);
    Alt2<Vec> alpha(4, zero);
    Vec a1 = Vec::unit(3, 1);
    alpha.set(0, 2, a1);
    CHECK(alpha.get(2, 0) == -a1);
    Vec x(4), y(4);
    x[0] = 2;
    y[2] = 1;
    CHECK(alpha.eval(x, y) == QSqrt2(2) * a1);
}

TEST_CASE("span utilities") {
    Gen gen;
    Mat m = gen.matrix(5, 3);
    std::vector<Vec> cols = {m.col(0), m.col(1), m.col(2)};
    std::vector<Vec> with_sums = cols;
    with_sums.push_back(cols[0] + cols[1]);
    CHECK(same_span(cols, with_sums));
    CHECK(in_span(cols, QSqrt2(3) * cols[1]));
    CHECK(span_basis(with_sums).size() == rank(m));
}
