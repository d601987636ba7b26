#include "g2syms/clifford.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace g2syms;

namespace {
const CliffordRep& rep() {
    static CliffordRep r = CliffordRep::build_standard();
    return r;
}
QSqrt2 rt2() { return QSqrt2::sqrt2(); }
}  // namespace

TEST_CASE("construction verifies the generator relations") {
    CHECK(rep().phi(3) * rep().phi(3) == Mat::identity(8));   // e4^2 = +Id
    CHECK((rep().phi(0) * rep().phi(0)).is_zero());           // e1 isotropic
    Mat anti = rep().phi(0) * rep().phi(4) + rep().phi(4) * rep().phi(0);
    CHECK(anti == QSqrt2(-2) * Mat::identity(8));             // <e1,e5> = 1
}

TEST_CASE("module action on spinors") {
    Spinor s2v = Vec::unit(8, 1);
    CHECK(rep().act(Vec::unit(7, 2), s2v) == -rt2() * Vec::unit(8, 0));  // e3 . s2 = -sqrt2 s1
    CHECK(rep().act(Vec(7), standard_nonisotropic_spinor()).is_zero());
    Spinor expected(8);
    expected[0] = 1;
    expected[4] = -1;
    CHECK(rep().act(Vec::unit(7, 3), standard_nonisotropic_spinor()) == expected);  // e4.(s1+s5)
}

TEST_CASE("orthonormal basis and volume normalization") {
    const auto& ehat = rep().orthonormal_basis();
    for (std::size_t i = 0; i < 7; ++i)
        for (std::size_t j = 0; j < 7; ++j) {
            QSqrt2 ip = rep().witt_form().eval(ehat[i], ehat[j]);
            if (i != j) CHECK(ip.is_zero());
            else CHECK((ip == QSqrt2(1) || ip == QSqrt2(-1)));
        }
    Mat vol = Mat::identity(8);
    for (std::size_t k : rep().volume_ordering()) vol = vol * rep().phi_of(ehat[k]);
    CHECK(vol == Mat::identity(8));
}

TEST_CASE("spin lift") {
    CHECK(spin_lift(rep(), Mat(7, 7)).is_zero());
    // exhaustive round trip over the 21-dimensional so(V)
    std::vector<Mat> sob = so_basis(rep());
    REQUIRE(sob.size() == 21);
    for (const Mat& a : sob) CHECK(lambda_star(rep(), spin_lift(rep(), a)) == a);
    // e1 e3 is in spin; its so-matrix lifts back to it exactly
    Mat z1 = rep().phi(0) * rep().phi(2);
    REQUIRE(rep().in_spin(z1));
    CHECK(spin_lift(rep(), lambda_star(rep(), z1)) == z1);

    Mat not_skew = Mat::identity(7);
    CHECK_THROWS_AS(spin_lift(rep(), not_skew), std::invalid_argument);
}

TEST_CASE("spin basis spans a 21-dimensional space containing the named elements") {
    REQUIRE(rep().spin_basis().size() == 21);
    CHECK(rank(flatten_columns(rep().spin_basis())) == 21);
    for (const Mat& m : pair_stabilizer_elements(rep()).all()) CHECK(rep().in_spin(m));
    CHECK_FALSE(rep().in_spin(rep().phi(0) * rep().phi(4)));  // <e1,e5> != 0
    CHECK(rep().in_spin(rep().phi(0) * rep().phi(4) + Mat::identity(8)));
}

TEST_CASE("stabilizer dimensions") {
    CHECK(stabilizer_algebra(rep(), {standard_nonisotropic_spinor()}).size() == 14);
    CHECK(stabilizer_algebra(rep(), {standard_nonisotropic_spinor(),
                                     standard_isotropic_spinor()})
              .size() == 8);
    CHECK(stabilizer_algebra(rep(), {}).size() == 21);
}

TEST_CASE("pair stabilizer bracket structure") {
    Report rpt = check_pair_stabilizer_structure(rep());
    INFO(rpt.summary());
    CHECK(rpt.all_pass());
}

TEST_CASE("kernel spaces of spinors") {
    KernelSpace k6 = kernel_space(rep(), standard_isotropic_spinor());
    REQUIRE(k6.basis.size() == 3);
    CHECK(same_span(k6.basis, {Vec::unit(7, 0), Vec::unit(7, 1), Vec::unit(7, 2)}));
    INFO(k6.report.summary());
    CHECK(k6.report.all_pass());

    CHECK(kernel_space(rep(), standard_nonisotropic_spinor()).basis.empty());
    CHECK(kernel_space(rep(), Vec(8)).basis.size() == 7);
}

TEST_CASE("full audit passes") {
    Report rpt = spinor_audit(rep());
    INFO(rpt.summary());
    CHECK(rpt.all_pass());
}
