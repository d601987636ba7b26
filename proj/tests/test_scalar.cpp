#include "g2syms/scalar.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace g2syms;

namespace {

QSqrt2 sqrt2() { return QSqrt2::sqrt2(); }

// Small random rationals: numerators in [-9,9], denominators in [1,9].
struct Gen {
    std::mt19937 rng{20240917};
    Rational rational() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        return Rational(num(rng), den(rng));
    }
    QSqrt2 scalar() { return QSqrt2(rational(), rational()); }
    QSqrt2 nonzero() {
        for (;;) {
            QSqrt2 x = scalar();
            if (!x.is_zero()) return x;
        }
    }
};

// Rational enclosure of sqrt2, used as an independent check on sign():
// 1.4142135 < sqrt2 < 1.4142136.
const Rational kSqrt2Lo(14142135, 10000000);
const Rational kSqrt2Hi(14142136, 10000000);

int interval_sign(const QSqrt2& x) {
    // returns the sign if the enclosure decides it, 9 otherwise
    Rational lo, hi;
    if (x.sqrt2_part() >= 0) {
        lo = Rational(x.rat_part() + x.sqrt2_part() * kSqrt2Lo);
        hi = Rational(x.rat_part() + x.sqrt2_part() * kSqrt2Hi);
    } else {
        lo = Rational(x.rat_part() + x.sqrt2_part() * kSqrt2Hi);
        hi = Rational(x.rat_part() + x.sqrt2_part() * kSqrt2Lo);
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    return 9;
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
    // (1+sqrt2)(-1+sqrt2) = 1
    CHECK((QSqrt2(1) + sqrt2()) * (QSqrt2(-1) + sqrt2()) == QSqrt2(1));
    // 1/sqrt2 = (1/2) sqrt2
    CHECK(QSqrt2(1) / sqrt2() == QSqrt2(Rational(0), Rational(1, 2)));
    // (3/2) + (-3/2) sqrt2, componentwise
    CHECK(QSqrt2(Rational(3, 2)) + QSqrt2(Rational(0), Rational(-3, 2)) ==
          QSqrt2(Rational(3, 2), Rational(-3, 2)));
}

TEST_CASE("division by zero is a distinct error") {
    CHECK_THROWS_AS(QSqrt2(1) / QSqrt2(0), DivisionByZero);
    CHECK_THROWS_AS(QSqrt2(0).inverse(), DivisionByZero);
}

TEST_CASE("sign") {
    CHECK((QSqrt2(1) - sqrt2()).sign() == -1);
    CHECK(QSqrt2(0).sign() == 0);
    // 3 - 2 sqrt2 > 0 because 9 > 8; checked against the rational oracle
    QSqrt2 x = QSqrt2(3) - QSqrt2(2) * sqrt2();
    CHECK(Rational(3 * 3) > Rational(2 * 2 * 2));
    CHECK(x.sign() == 1);
    CHECK(interval_sign(x) == 1);
}

TEST_CASE("field axioms on randomized triples") {
    Gen gen;
    for (int it = 0; it < 1000; ++it) {
        QSqrt2 a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("sign is multiplicative and consistent with interval bounds") {
    Gen gen;
    for (int it = 0; it < 1000; ++it) {
        QSqrt2 a = gen.scalar(), b = gen.scalar();
        CHECK((a * b).sign() == a.sign() * b.sign());
        int is = interval_sign(a + b);
        if (is != 9) CHECK((a + b).sign() == is);
    }
}

TEST_CASE("inverse is an involution on nonzero scalars") {
    Gen gen;
    for (int it = 0; it < 500; ++it) {
        QSqrt2 a = gen.nonzero();
        CHECK(a.inverse().inverse() == a);
        CHECK(a * a.inverse() == QSqrt2(1));
    }
}

TEST_CASE("ordering is total and compatible with the real embedding") {
    Gen gen;
    for (int it = 0; it < 300; ++it) {
        QSqrt2 a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
        CHECK(((a < b) + (b < a) + (a == b)) == 1);
        if (a < b && b < c) CHECK(a < c);
        if (a < b) CHECK(a + c < b + c);
    }
    CHECK(QSqrt2(Rational(7, 5)) < sqrt2());
    CHECK(sqrt2() < QSqrt2(Rational(3, 2)));
}

TEST_CASE("scalar string parsing") {
    CHECK(parse_scalar("1/2+3/4*sqrt2") == QSqrt2(Rational(1, 2), Rational(3, 4)));
    CHECK(parse_scalar("-1+sqrt2") == QSqrt2(Rational(-1), Rational(1)));
    CHECK(parse_scalar("2-sqrt2") == QSqrt2(Rational(2), Rational(-1)));
    CHECK(parse_scalar("-5/3") == QSqrt2(Rational(-5, 3)));
    CHECK(parse_scalar("sqrt2") == QSqrt2::sqrt2());
    CHECK_FALSE(parse_scalar("").has_value());
    CHECK_FALSE(parse_scalar("1+").has_value());
    CHECK_FALSE(parse_scalar("sqrt3").has_value());
}
